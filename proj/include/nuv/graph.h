#ifndef NUV_GRAPH_H_
#define NUV_GRAPH_H_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace nuv {

using Vertex = std::int32_t;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Edge {
  Vertex u;
  Vertex v;
  double length;
};

struct Point {
  double x;
  double y;
};

inline double euclidean_distance(const Point& a, const Point& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  // sqrt is correctly rounded under IEEE 754; hypot is not guaranteed to be.
  return std::sqrt(dx * dx + dy * dy);
}

// Immutable, connected, undirected graph with positive finite edge lengths.
//
// Three storage layouts share one interface:
//  - kSparse: CSR adjacency built from an edge list (grid, linear, files).
//  - kDense: complete graph stored as an n x n length matrix (mean-field).
//  - kEuclidean: complete graph over planar points; lengths are computed on
//    demand and the graph is flagged metric, so d(u, v) = length(u, v).
//
// All invariants are checked at construction; a constructed graph is valid.
class WeightedGraph {
 public:
  enum class Storage { kSparse, kDense, kEuclidean };

  // Throws InputError on out-of-range endpoints, self-loops, parallel edges,
  // nonpositive or non-finite lengths, or a disconnected result.
  static WeightedGraph from_edges(Vertex n, std::vector<Edge> edges);

  // `lengths` is row-major n x n; must be symmetric with positive finite
  // off-diagonal entries. The diagonal is ignored and stored as 0.
  static WeightedGraph complete(Vertex n, std::vector<double> lengths);

  static WeightedGraph euclidean(std::vector<Point> points);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const;
  Storage storage() const { return storage_; }

  // Complete graphs (dense matrix or Euclidean).
  bool is_complete() const { return storage_ != Storage::kSparse; }
  // Lengths satisfy the triangle inequality, so shortest paths are direct.
  bool is_metric() const { return storage_ == Storage::kEuclidean; }

  bool is_valid_vertex(Vertex v) const { return v >= 0 && v < n_; }
  // Throws InputError for an out-of-range index.
  void check_vertex(Vertex v) const;

  // Edge length, or kInfinity when u and v are not adjacent (0 when u == v).
  double length(Vertex u, Vertex v) const;

  template <typename F>
  void for_each_neighbor(Vertex u, F&& f) const {
    switch (storage_) {
      case Storage::kSparse:
        for (std::size_t k = offsets_[u]; k < offsets_[u + 1]; ++k) {
          f(targets_[k], weights_[k]);
        }
        break;
      case Storage::kDense: {
        const double* row = &matrix_[static_cast<std::size_t>(u) * n_];
        for (Vertex v = 0; v < n_; ++v) {
          if (v != u) f(v, row[v]);
        }
        break;
      }
      case Storage::kEuclidean:
        for (Vertex v = 0; v < n_; ++v) {
          if (v != u) f(v, euclidean_distance(points_[u], points_[v]));
        }
        break;
    }
  }

  // Row u of the length matrix (kDense only).
  std::span<const double> dense_row(Vertex u) const {
    return {matrix_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }

  // All edges with u < v, sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;

  // Coordinates for kEuclidean graphs; empty otherwise.
  std::span<const Point> points() const { return points_; }

 private:
  WeightedGraph() = default;

  Vertex n_ = 0;
  Storage storage_ = Storage::kSparse;
  // kSparse
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<double> weights_;
  // kDense
  std::vector<double> matrix_;
  // kEuclidean
  std::vector<Point> points_;
};

}  // namespace nuv

#endif  // NUV_GRAPH_H_
