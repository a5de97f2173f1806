#include "nuv/baselines.h"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <tuple>

#include "nuv/error.h"
#include "nuv/walk.h"

namespace nuv {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(Vertex n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  Vertex find(Vertex x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }

 private:
  std::vector<Vertex> parent_;
  std::vector<int> rank_;
};

void check_threshold(Vertex n, Vertex threshold) {
  if (n > threshold) {
    throw ThresholdError("exact TSP is limited to n <= " + std::to_string(threshold) +
                         " (got n = " + std::to_string(n) + ")");
  }
}

// best[mask * n + v]: shortest path from start through exactly `mask`,
// ending at v. Masks always contain start.
struct HeldKarp {
  std::vector<double> best;
  std::vector<std::int8_t> parent;
};

HeldKarp held_karp(const DistanceMatrix& d, Vertex start) {
  const Vertex n = d.size();
  const std::size_t states = std::size_t{1} << n;
  HeldKarp hk;
  hk.best.assign(states * n, kInfinity);
  hk.parent.assign(states * n, -1);
  hk.best[(std::size_t{1} << start) * n + start] = 0.0;
  for (std::size_t mask = 1; mask < states; ++mask) {
    if (!(mask & (std::size_t{1} << start))) continue;
    for (Vertex last = 0; last < n; ++last) {
      const double here = hk.best[mask * n + last];
      if (here == kInfinity) continue;
      for (Vertex next = 0; next < n; ++next) {
        if (mask & (std::size_t{1} << next)) continue;
        const std::size_t to = (mask | (std::size_t{1} << next)) * n + next;
        const double alt = here + d(last, next);
        if (alt < hk.best[to]) {
          hk.best[to] = alt;
          hk.parent[to] = static_cast<std::int8_t>(last);
        }
      }
    }
  }
  return hk;
}

std::vector<Vertex> unwind(const HeldKarp& hk, Vertex n, Vertex last) {
  std::vector<Vertex> order;
  std::size_t mask = (std::size_t{1} << n) - 1;
  Vertex v = last;
  while (v >= 0) {
    order.push_back(v);
    const Vertex prev = hk.parent[mask * n + v];
    mask &= ~(std::size_t{1} << v);
    v = prev;
  }
  std::reverse(order.begin(), order.end());
  return order;
}

void check_start(const DistanceMatrix& d, Vertex start) {
  if (start < 0 || start >= d.size()) {
    throw InputError("vertex " + std::to_string(start) + " outside [0, " +
                     std::to_string(d.size()) + ")");
  }
}

}  // namespace

double mst_length(const WeightedGraph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.length, a.u, a.v) < std::tie(b.length, b.u, b.v);
  });
  DisjointSets sets(g.num_vertices());
  double total = 0.0;
  Vertex joined = 0;
  for (const auto& e : edges) {
    if (sets.unite(e.u, e.v)) {
      total += e.length;
      if (++joined + 1 == g.num_vertices()) break;
    }
  }
  return total;
}

TspResult exact_tsp_walk(const DistanceMatrix& d, Vertex start, Vertex threshold) {
  check_start(d, start);
  const Vertex n = d.size();
  check_threshold(n, std::min(threshold, Vertex{20}));
  const auto hk = held_karp(d, start);
  const std::size_t full = (std::size_t{1} << n) - 1;
  Vertex last = start;
  double best = kInfinity;
  for (Vertex v = 0; v < n; ++v) {
    if (hk.best[full * n + v] < best) {
      best = hk.best[full * n + v];
      last = v;
    }
  }
  return {best, unwind(hk, n, last)};
}

TspResult exact_tsp_walk(const WeightedGraph& g, Vertex start, Vertex threshold) {
  g.check_vertex(start);
  check_threshold(g.num_vertices(), threshold);
  return exact_tsp_walk(all_pairs_distances(g), start, threshold);
}

TspResult exact_tsp_tour(const DistanceMatrix& d, Vertex start, Vertex threshold) {
  check_start(d, start);
  const Vertex n = d.size();
  check_threshold(n, std::min(threshold, Vertex{20}));
  if (n == 1) return {0.0, {start}};
  const auto hk = held_karp(d, start);
  const std::size_t full = (std::size_t{1} << n) - 1;
  Vertex last = start;
  double best = kInfinity;
  for (Vertex v = 0; v < n; ++v) {
    if (v == start) continue;
    const double closed = hk.best[full * n + v] + d(v, start);
    if (closed < best) {
      best = closed;
      last = v;
    }
  }
  return {best, unwind(hk, n, last)};
}

std::vector<Vertex> expand_walk(const WeightedGraph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> out;
  if (order.empty()) return out;
  out.push_back(order.front());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const auto leg = shortest_path(g, order[i - 1], order[i]);
    out.insert(out.end(), leg.path.begin() + 1, leg.path.end());
  }
  return out;
}

double nuv_tsp_ratio(const WeightedGraph& g, Vertex start, Vertex threshold) {
  const auto tsp = exact_tsp_walk(g, start, threshold);
  if (tsp.length == 0.0) return 1.0;
  return nuv_walk(g, start).total_length / tsp.length;
}

BaselineResult compute_baselines(const WeightedGraph& g, Vertex start, Vertex threshold) {
  g.check_vertex(start);
  BaselineResult out;
  out.mst_length = mst_length(g);
  if (g.num_vertices() <= threshold) {
    const auto d = all_pairs_distances(g);
    auto walk = exact_tsp_walk(d, start, threshold);
    out.tsp_length = walk.length;
    out.tsp_order = std::move(walk.order);
    out.tsp_tour_length = exact_tsp_tour(d, start, threshold).length;
  }
  return out;
}

}  // namespace nuv
