#include "nuv/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "nuv/error.h"

namespace nuv {
namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

bool valid_length(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

WeightedGraph WeightedGraph::from_edges(Vertex n, std::vector<Edge> edges) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge " + edge_str(e) + " has an endpoint outside [0, " +
                       std::to_string(n) + ")");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (!valid_length(e.length)) {
      throw InputError("edge " + edge_str(e) +
                       " must have a positive finite length");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InputError("parallel edge " + edge_str(edges[i]));
    }
  }

  WeightedGraph g;
  g.n_ = n;
  g.storage_ = Storage::kSparse;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& e : edges) {
    ++degree[e.u];
    ++degree[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  g.weights_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  // Edges are sorted by (u, v), so each adjacency list comes out sorted by
  // neighbor index.
  for (const auto& e : edges) {
    g.targets_[fill[e.u]] = e.v;
    g.weights_[fill[e.u]++] = e.length;
  }
  for (const auto& e : edges) {
    g.targets_[fill[e.v]] = e.u;
    g.weights_[fill[e.v]++] = e.length;
  }
  for (Vertex v = 0; v < n; ++v) {
    const auto lo = g.offsets_[v], hi = g.offsets_[v + 1];
    std::vector<std::pair<Vertex, double>> adj;
    for (auto k = lo; k < hi; ++k) adj.emplace_back(g.targets_[k], g.weights_[k]);
    std::sort(adj.begin(), adj.end());
    for (auto k = lo; k < hi; ++k) {
      g.targets_[k] = adj[k - lo].first;
      g.weights_[k] = adj[k - lo].second;
    }
  }

  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (auto k = g.offsets_[u]; k < g.offsets_[u + 1]; ++k) {
      const Vertex v = g.targets_[k];
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
    }
  }
  if (reached != n) {
    throw InputError("graph is disconnected: " + std::to_string(reached) +
                     " of " + std::to_string(n) +
                     " vertices reachable from vertex 0");
  }
  return g;
}

WeightedGraph WeightedGraph::complete(Vertex n, std::vector<double> lengths) {
  if (n < 1) throw InputError("graph must have at least one vertex");
  const auto sz = static_cast<std::size_t>(n);
  if (lengths.size() != sz * sz) {
    throw InputError("length matrix must have n*n entries");
  }
  for (std::size_t u = 0; u < sz; ++u) {
    lengths[u * sz + u] = 0.0;
    for (std::size_t v = u + 1; v < sz; ++v) {
      const double a = lengths[u * sz + v];
      if (!valid_length(a)) {
        throw InputError("edge (" + std::to_string(u) + ", " +
                         std::to_string(v) +
                         ") must have a positive finite length");
      }
      if (a != lengths[v * sz + u]) {
        throw InputError("length matrix is not symmetric at (" +
                         std::to_string(u) + ", " + std::to_string(v) + ")");
      }
    }
  }
  WeightedGraph g;
  g.n_ = n;
  g.storage_ = Storage::kDense;
  g.matrix_ = std::move(lengths);
  return g;
}

WeightedGraph WeightedGraph::euclidean(std::vector<Point> points) {
  if (points.empty()) throw InputError("graph must have at least one vertex");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i].x) || !std::isfinite(points[i].y)) {
      throw InputError("point " + std::to_string(i) + " is not finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (points[i].x == points[j].x && points[i].y == points[j].y) {
        throw InputError("points " + std::to_string(j) + " and " +
                         std::to_string(i) + " coincide");
      }
    }
  }
  WeightedGraph g;
  g.n_ = static_cast<Vertex>(points.size());
  g.storage_ = Storage::kEuclidean;
  g.points_ = std::move(points);
  return g;
}

std::size_t WeightedGraph::num_edges() const {
  if (storage_ == Storage::kSparse) return targets_.size() / 2;
  const auto sz = static_cast<std::size_t>(n_);
  return sz * (sz - 1) / 2;
}

void WeightedGraph::check_vertex(Vertex v) const {
  if (!is_valid_vertex(v)) {
    throw InputError("vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(n_) + ")");
  }
}

double WeightedGraph::length(Vertex u, Vertex v) const {
  if (u == v) return 0.0;
  switch (storage_) {
    case Storage::kSparse: {
      const auto first = targets_.begin() + offsets_[u];
      const auto last = targets_.begin() + offsets_[u + 1];
      const auto it = std::lower_bound(first, last, v);
      if (it == last || *it != v) return kInfinity;
      return weights_[it - targets_.begin()];
    }
    case Storage::kDense:
      return matrix_[static_cast<std::size_t>(u) * n_ + v];
    case Storage::kEuclidean:
      return euclidean_distance(points_[u], points_[v]);
  }
  return kInfinity;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for_each_neighbor(u, [&](Vertex v, double len) {
      if (u < v) out.push_back({u, v, len});
    });
  }
  return out;
}

}  // namespace nuv
