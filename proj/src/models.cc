#include "nuv/models.h"

#include <cmath>
#include <limits>
#include <string>

#include "nuv/error.h"
#include "nuv/rng.h"

namespace nuv {
namespace {

void require_size(Vertex size, std::string_view what) {
  if (size < 2) {
    throw InputError(std::string(what) + " must be at least 2 (got " +
                     std::to_string(size) + ")");
  }
}

}  // namespace

std::string_view to_string(Model m) {
  switch (m) {
    case Model::kSquare:
      return "square";
    case Model::kGrid:
      return "grid";
    case Model::kMeanField:
      return "mean_field";
    case Model::kLinear:
      return "linear";
  }
  return "unknown";
}

std::string_view to_string(Scaling s) {
  return s == Scaling::kUnit ? "unit" : "nearest-neighbor";
}

std::string_view to_string(LengthLaw l) {
  return l == LengthLaw::kExponential ? "exponential" : "uniform";
}

Model parse_model(std::string_view name) {
  if (name == "square") return Model::kSquare;
  if (name == "grid") return Model::kGrid;
  if (name == "mean_field" || name == "mean-field") return Model::kMeanField;
  if (name == "linear") return Model::kLinear;
  throw InputError("unknown model '" + std::string(name) +
                   "' (expected square, grid, mean_field or linear)");
}

Scaling parse_scaling(std::string_view name) {
  if (name == "unit") return Scaling::kUnit;
  if (name == "nearest-neighbor" || name == "nearest_neighbor" || name == "nn") {
    return Scaling::kNearestNeighbor;
  }
  throw InputError("unknown scaling '" + std::string(name) +
                   "' (expected unit or nearest-neighbor)");
}

LengthLaw parse_length_law(std::string_view name) {
  if (name == "exponential") return LengthLaw::kExponential;
  if (name == "uniform") return LengthLaw::kUniform;
  throw InputError("unknown length distribution '" + std::string(name) +
                   "' (expected exponential or uniform)");
}

void InstanceSpec::validate() const {
  require_size(size, model == Model::kGrid ? "grid side m" : "vertex count n");
  if (model == Model::kGrid && size > 46340) {
    throw InputError("grid side m is too large");
  }
}

GeometricInstance gen_square(Vertex n, std::uint64_t seed, Scaling scaling) {
  require_size(n, "vertex count n");
  Rng rng(seed);
  const double side = scaling == Scaling::kUnit ? 1.0 : std::sqrt(static_cast<double>(n));
  std::vector<Point> points(n);
  for (auto& p : points) {
    p.x = rng.uniform_open();
    p.y = rng.uniform_open();
    if (scaling != Scaling::kUnit) {
      p.x *= side;
      p.y *= side;
    }
  }
  auto graph = WeightedGraph::euclidean(points);
  return {std::move(graph), std::move(points)};
}

WeightedGraph gen_grid(Vertex m, std::uint64_t seed, LengthLaw law) {
  require_size(m, "grid side m");
  Rng rng(seed);
  auto draw = [&] {
    return law == LengthLaw::kExponential ? rng.exponential(1.0) : rng.uniform_open();
  };
  std::vector<Edge> edges;
  edges.reserve(2 * static_cast<std::size_t>(m) * (m - 1));
  for (Vertex row = 0; row < m; ++row) {
    for (Vertex col = 0; col < m; ++col) {
      const Vertex u = row * m + col;
      if (col + 1 < m) edges.push_back({u, u + 1, draw()});
      if (row + 1 < m) edges.push_back({u, u + m, draw()});
    }
  }
  return WeightedGraph::from_edges(m * m, std::move(edges));
}

WeightedGraph gen_mean_field(Vertex n, std::uint64_t seed) {
  require_size(n, "vertex count n");
  Rng rng(seed);
  const auto sz = static_cast<std::size_t>(n);
  const double mean = static_cast<double>(n);
  std::vector<double> lengths(sz * sz, 0.0);
  for (std::size_t u = 0; u < sz; ++u) {
    for (std::size_t v = u + 1; v < sz; ++v) {
      lengths[u * sz + v] = lengths[v * sz + u] = rng.exponential(mean);
    }
  }
  return WeightedGraph::complete(n, std::move(lengths));
}

WeightedGraph gen_linear(Vertex n) {
  require_size(n, "vertex count n");
  const double n2 = static_cast<double>(n) * n;
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex i = 1; i < n; ++i) edges.push_back({i - 1, i, 1.0 - i / n2});
  return WeightedGraph::from_edges(n, std::move(edges));
}

Instance generate(const InstanceSpec& spec) {
  spec.validate();
  switch (spec.model) {
    case Model::kSquare:
      return gen_square(spec.size, spec.seed, spec.scaling);
    case Model::kGrid:
      return {gen_grid(spec.size, spec.seed, spec.grid_law), {}};
    case Model::kMeanField:
      return {gen_mean_field(spec.size, spec.seed), {}};
    case Model::kLinear:
      return {gen_linear(spec.size), {}};
  }
  throw InputError("unknown model");
}

}  // namespace nuv
