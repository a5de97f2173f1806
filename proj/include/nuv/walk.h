#ifndef NUV_WALK_H_
#define NUV_WALK_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "nuv/cover_result.h"
#include "nuv/graph.h"

namespace nuv {

struct WalkOptions {
  // Retain the vertex path of every step. Off by default: at n = 10^4 the
  // paths dominate memory.
  bool keep_paths = false;
  // Also compute the return leg d(v_{n-1}, v_0).
  bool tour = false;
};

// The nearest-unvisited-vertex walk from `start`: order[i] is the vertex of
// rank i and step_distances[i] = d(order[i], order[i + 1]).
struct WalkResult {
  Vertex start = 0;
  std::vector<Vertex> order;
  std::vector<double> step_distances;
  // step_paths[i] runs from order[i] to order[i + 1] (when kept).
  std::vector<std::vector<Vertex>> step_paths;
  double total_length = 0.0;
  std::optional<double> closing_distance;

  double tour_length() const { return total_length + closing_distance.value_or(0.0); }

  // Walk length up to each rank: prefix[0] = 0, prefix[n-1] = total_length.
  std::vector<double> prefix_lengths() const;

  // Step distance leaving each vertex, indexed by vertex; 0 for the last one.
  std::vector<double> departure_distances() const;

  // Rank of each vertex in the visit order.
  std::vector<Vertex> ranks() const;
};

WalkResult nuv_walk(const WeightedGraph& g, Vertex start, WalkOptions options = {});

// Centers picked along the walk: the start, then each time the walk has
// advanced strictly more than r past the previous center. Every vertex is
// within r of a center and size <= 1 + total_length / r.
CoverResult walk_cover_selection(const WalkResult& walk, double radius);

struct Histogram {
  double bin_width = 1.0;
  // Index of the bin counts[0] covers: [first_bin * w, (first_bin + 1) * w).
  std::int64_t first_bin = 0;
  std::vector<std::size_t> counts;

  std::size_t total() const;
};

// Step distances binned by floor(d / bin_width), trimmed to the occupied
// range. Empty for a one-vertex walk.
Histogram step_histogram(const WalkResult& walk, double bin_width);

}  // namespace nuv

#endif  // NUV_WALK_H_
