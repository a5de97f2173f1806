#ifndef NUV_SHORTEST_PATH_H_
#define NUV_SHORTEST_PATH_H_

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "nuv/graph.h"

namespace nuv {

struct PathResult {
  Vertex target = -1;
  double distance = 0.0;
  // Vertex sequence from the source to `target`, both inclusive.
  std::vector<Vertex> path;
};

// Reusable single-source shortest-path search.
//
// Vertices are settled in increasing (distance, index) order. Among
// equal-length routes the predecessor with the smaller index wins. Dense
// graphs use an O(n) array scan per settled vertex; sparse graphs use a
// binary heap with lazy deletion. All comparisons are exact.
class DijkstraSearch {
 public:
  explicit DijkstraSearch(const WeightedGraph& g)
      : g_(&g),
        dist_(g.num_vertices(), kInfinity),
        pred_(g.num_vertices(), -1),
        settled_(g.num_vertices(), 0) {}

  // Runs from `source` until `stop(v)` returns true for a freshly settled v,
  // or every vertex is settled. Returns the stopping vertex or -1.
  template <typename Stop>
  Vertex run(Vertex source, Stop&& stop) {
    reset();
    source_ = source;
    touch(source);
    dist_[source] = 0.0;
    return g_->is_complete() ? run_dense(std::forward<Stop>(stop))
                             : run_sparse(std::forward<Stop>(stop));
  }

  Vertex run_all(Vertex source) {
    return run(source, [](Vertex) { return false; });
  }

  Vertex source() const { return source_; }
  double distance(Vertex v) const { return dist_[v]; }
  Vertex predecessor(Vertex v) const { return pred_[v]; }
  bool settled(Vertex v) const { return settled_[v] != 0; }
  std::span<const double> distances() const { return dist_; }

  // Source-to-v path through the predecessor tree; v must be settled.
  std::vector<Vertex> path_to(Vertex v) const;

 private:
  void touch(Vertex v) {
    if (!touched_flag(v)) touched_.push_back(v);
  }
  bool touched_flag(Vertex v) const { return dist_[v] != kInfinity || settled_[v]; }
  void reset();

  void relax(Vertex u, Vertex v, double len) {
    if (settled_[v]) return;
    const double alt = dist_[u] + len;
    if (alt < dist_[v] || (alt == dist_[v] && u < pred_[v])) {
      touch(v);
      dist_[v] = alt;
      pred_[v] = u;
      if (!g_->is_complete()) heap_.emplace(alt, v);
    }
  }

  template <typename Stop>
  Vertex run_dense(Stop&& stop) {
    const Vertex n = g_->num_vertices();
    const bool matrix = g_->storage() == WeightedGraph::Storage::kDense;
    for (Vertex round = 0; round < n; ++round) {
      Vertex u = -1;
      double best = kInfinity;
      for (Vertex v = 0; v < n; ++v) {
        if (!settled_[v] && dist_[v] < best) {
          best = dist_[v];
          u = v;
        }
      }
      if (u < 0) break;
      settled_[u] = 1;
      if (stop(u)) return u;
      if (matrix) {
        const auto row = g_->dense_row(u);
        for (Vertex v = 0; v < n; ++v) {
          if (v != u) relax(u, v, row[v]);
        }
      } else {
        g_->for_each_neighbor(u, [&](Vertex v, double len) { relax(u, v, len); });
      }
    }
    return -1;
  }

  template <typename Stop>
  Vertex run_sparse(Stop&& stop) {
    heap_.emplace(0.0, source_);
    while (!heap_.empty()) {
      const auto [d, u] = heap_.top();
      heap_.pop();
      if (settled_[u] || d != dist_[u]) continue;
      settled_[u] = 1;
      if (stop(u)) return u;
      g_->for_each_neighbor(u, [&](Vertex v, double len) { relax(u, v, len); });
    }
    return -1;
  }

  using Entry = std::pair<double, Vertex>;

  const WeightedGraph* g_;
  Vertex source_ = -1;
  std::vector<double> dist_;
  std::vector<Vertex> pred_;
  std::vector<std::uint8_t> settled_;
  std::vector<Vertex> touched_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

// Symmetric n x n matrix of shortest-path distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(Vertex n)
      : n_(n), d_(static_cast<std::size_t>(n) * n, 0.0) {}

  Vertex size() const { return n_; }
  double operator()(Vertex u, Vertex v) const { return d_[index(u, v)]; }
  double& at(Vertex u, Vertex v) { return d_[index(u, v)]; }
  std::span<const double> row(Vertex u) const {
    return {d_.data() + static_cast<std::size_t>(u) * n_,
            static_cast<std::size_t>(n_)};
  }
  double max() const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }
  Vertex n_ = 0;
  std::vector<double> d_;
};

// Minimum-length path. The search always runs from min(source, target) and
// the path is reversed if needed, so d(u, v) == d(v, u) bit for bit.
// Throws InputError for invalid vertices.
PathResult shortest_path(const WeightedGraph& g, Vertex source, Vertex target);

// Closest vertex outside `visited` (nonzero entries mark visited vertices),
// ties broken by smallest index. Metric graphs take the direct edge.
// Throws InputError if every vertex is visited or source is invalid.
PathResult nearest_unvisited(const WeightedGraph& g, Vertex source,
                             std::span<const std::uint8_t> visited);
PathResult nearest_unvisited(const WeightedGraph& g, Vertex source,
                             std::span<const Vertex> visited_list);

// Intended for n up to a few thousand: one full search per source.
DistanceMatrix all_pairs_distances(const WeightedGraph& g);

double diameter(const WeightedGraph& g);

}  // namespace nuv

#endif  // NUV_SHORTEST_PATH_H_
