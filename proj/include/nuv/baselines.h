#ifndef NUV_BASELINES_H_
#define NUV_BASELINES_H_

#include <optional>
#include <vector>

#include "nuv/graph.h"
#include "nuv/shortest_path.h"

namespace nuv {

inline constexpr Vertex kExactTspThreshold = 15;

// Total length of a minimum spanning tree (Kruskal; equal lengths ordered by
// endpoint indices).
double mst_length(const WeightedGraph& g);

struct TspResult {
  double length = 0.0;
  // Visit order over the shortest-path metric; consecutive entries need not
  // be adjacent in the graph. See expand_walk.
  std::vector<Vertex> order;
};

// Shortest walk from `start` visiting every vertex, revisits allowed. Solved
// as a Hamiltonian path over the metric closure by Held-Karp dynamic
// programming. Throws ThresholdError above the threshold.
TspResult exact_tsp_walk(const WeightedGraph& g, Vertex start,
                         Vertex threshold = kExactTspThreshold);
TspResult exact_tsp_walk(const DistanceMatrix& d, Vertex start,
                         Vertex threshold = kExactTspThreshold);

// Shortest closed walk through every vertex; order starts at `start` and the
// length includes the return leg.
TspResult exact_tsp_tour(const DistanceMatrix& d, Vertex start = 0,
                         Vertex threshold = kExactTspThreshold);

// Edge-level walk obtained by joining consecutive visits with shortest paths.
std::vector<Vertex> expand_walk(const WeightedGraph& g, const std::vector<Vertex>& order);

// L_NUV(g, start) / L_TSP(g, start); at least 1. For n == 1 returns 1.
double nuv_tsp_ratio(const WeightedGraph& g, Vertex start,
                     Vertex threshold = kExactTspThreshold);

struct BaselineResult {
  double mst_length = 0.0;
  std::optional<double> tsp_length;       // walk convention
  std::optional<double> tsp_tour_length;  // tour convention
  std::optional<std::vector<Vertex>> tsp_order;
};

// MST always; exact TSP (walk and tour) when n <= threshold.
BaselineResult compute_baselines(const WeightedGraph& g, Vertex start,
                                 Vertex threshold = kExactTspThreshold);

}  // namespace nuv

#endif  // NUV_BASELINES_H_
