// Brute-force reference computations for small instances. Nothing here uses
// the library's search code: distances come from Floyd-Warshall over the
// raw edge list.
#ifndef NUV_TESTS_ORACLES_H_
#define NUV_TESTS_ORACLES_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "nuv/graph.h"

namespace nuv::oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix floyd_warshall(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  Matrix d(n, std::vector<double>(n, kInfinity));
  for (Vertex v = 0; v < n; ++v) d[v][v] = 0.0;
  for (const auto& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = e.length;
  for (Vertex k = 0; k < n; ++k)
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  return d;
}

struct Walk {
  std::vector<Vertex> order;
  double length = 0.0;
};

// Recomputes the full argmin over unvisited vertices at every step.
inline Walk brute_force_walk(const Matrix& d, Vertex start) {
  const Vertex n = static_cast<Vertex>(d.size());
  std::vector<bool> visited(n, false);
  Walk w;
  w.order.push_back(start);
  visited[start] = true;
  Vertex cur = start;
  for (Vertex step = 1; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best < 0 || d[cur][v] < d[cur][best]) best = v;
    }
    w.length += d[cur][best];
    visited[best] = true;
    w.order.push_back(best);
    cur = best;
  }
  return w;
}

// Minimum over all (n-1)! visit orders starting at `start`.
inline double factorial_tsp_walk(const Matrix& d, Vertex start) {
  const Vertex n = static_cast<Vertex>(d.size());
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < n; ++v)
    if (v != start) rest.push_back(v);
  double best = kInfinity;
  do {
    double len = 0.0;
    Vertex cur = start;
    for (Vertex v : rest) {
      len += d[cur][v];
      cur = v;
    }
    best = std::min(best, len);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return rest.empty() ? 0.0 : best;
}

// Minimum cover size by enumerating all 2^n center subsets.
inline int subset_cover_number(const Matrix& d, double r) {
  const Vertex n = static_cast<Vertex>(d.size());
  int best = n;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      bool covered = false;
      for (Vertex c = 0; c < n && !covered; ++c)
        covered = (mask >> c & 1) && d[c][v] <= r;
      ok = covered;
    }
    if (ok) best = size;
  }
  return best;
}

// Random connected graph: a random spanning tree plus extra edges. With
// integer_lengths, lengths are small integers (many exact ties).
inline WeightedGraph random_connected(std::mt19937_64& rng, Vertex n, double extra_edge_prob,
                                      bool integer_lengths) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> small(1, 4);
  auto draw = [&] { return integer_lengths ? double(small(rng)) : 0.05 + unit(rng); };
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
  for (Vertex v = 1; v < n; ++v) {
    const Vertex u = std::uniform_int_distribution<Vertex>(0, v - 1)(rng);
    edges.push_back({u, v, draw()});
    has[u][v] = has[v][u] = true;
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!has[u][v] && unit(rng) < extra_edge_prob) edges.push_back({u, v, draw()});
  return WeightedGraph::from_edges(n, std::move(edges));
}

}  // namespace nuv::oracle

#endif  // NUV_TESTS_ORACLES_H_
