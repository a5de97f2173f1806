#include "nuv/walk.h"

#include <cmath>
#include <numeric>
#include <string>

#include "nuv/error.h"
#include "nuv/shortest_path.h"

namespace nuv {

std::string_view to_string(CoverMethod m) {
  switch (m) {
    case CoverMethod::kExact:
      return "exact";
    case CoverMethod::kGreedy:
      return "greedy";
    case CoverMethod::kWalkDerived:
      return "walk-derived";
  }
  return "unknown";
}

std::vector<double> WalkResult::prefix_lengths() const {
  std::vector<double> prefix(order.size(), 0.0);
  for (std::size_t i = 0; i < step_distances.size(); ++i) {
    prefix[i + 1] = prefix[i] + step_distances[i];
  }
  return prefix;
}

std::vector<double> WalkResult::departure_distances() const {
  std::vector<double> out(order.size(), 0.0);
  for (std::size_t i = 0; i < step_distances.size(); ++i) {
    out[order[i]] = step_distances[i];
  }
  return out;
}

std::vector<Vertex> WalkResult::ranks() const {
  std::vector<Vertex> rank(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<Vertex>(i);
  }
  return rank;
}

WalkResult nuv_walk(const WeightedGraph& g, Vertex start, WalkOptions options) {
  g.check_vertex(start);
  const Vertex n = g.num_vertices();

  WalkResult w;
  w.start = start;
  w.order.reserve(n);
  w.step_distances.reserve(n > 0 ? n - 1 : 0);
  w.order.push_back(start);

  std::vector<std::uint8_t> visited(n, 0);
  visited[start] = 1;

  if (g.is_metric()) {
    std::vector<Vertex> unvisited;
    unvisited.reserve(n - 1);
    for (Vertex v = 0; v < n; ++v) {
      if (v != start) unvisited.push_back(v);
    }
    Vertex current = start;
    while (!unvisited.empty()) {
      std::size_t best = 0;
      double best_d = kInfinity;
      for (std::size_t k = 0; k < unvisited.size(); ++k) {
        const double d = g.length(current, unvisited[k]);
        if (d < best_d || (d == best_d && unvisited[k] < unvisited[best])) {
          best_d = d;
          best = k;
        }
      }
      const Vertex next = unvisited[best];
      unvisited[best] = unvisited.back();
      unvisited.pop_back();
      if (options.keep_paths) w.step_paths.push_back({current, next});
      w.step_distances.push_back(best_d);
      w.order.push_back(next);
      current = next;
    }
  } else {
    DijkstraSearch search(g);
    Vertex current = start;
    for (Vertex step = 1; step < n; ++step) {
      const Vertex next = search.run(current, [&](Vertex v) { return visited[v] == 0; });
      visited[next] = 1;
      if (options.keep_paths) w.step_paths.push_back(search.path_to(next));
      w.step_distances.push_back(search.distance(next));
      w.order.push_back(next);
      current = next;
    }
  }

  w.total_length = 0.0;
  for (double d : w.step_distances) w.total_length += d;
  if (options.tour) {
    w.closing_distance = shortest_path(g, w.order.back(), start).distance;
  }
  return w;
}

CoverResult walk_cover_selection(const WalkResult& walk, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InputError("cover radius must be positive and finite");
  }
  CoverResult out;
  out.radius = radius;
  out.method = CoverMethod::kWalkDerived;
  const auto prefix = walk.prefix_lengths();
  std::size_t anchor = 0;
  out.centers.push_back(walk.order[0]);
  for (std::size_t i = 1; i < walk.order.size(); ++i) {
    if (prefix[i] - prefix[anchor] > radius) {
      anchor = i;
      out.centers.push_back(walk.order[i]);
    }
  }
  out.size = static_cast<int>(out.centers.size());
  return out;
}

std::size_t Histogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

Histogram step_histogram(const WalkResult& walk, double bin_width) {
  if (!(bin_width > 0.0) || !std::isfinite(bin_width)) {
    throw InputError("histogram bin width must be positive and finite");
  }
  Histogram h;
  h.bin_width = bin_width;
  if (walk.step_distances.empty()) return h;
  std::vector<std::int64_t> bins;
  bins.reserve(walk.step_distances.size());
  for (double d : walk.step_distances) {
    bins.push_back(static_cast<std::int64_t>(std::floor(d / bin_width)));
  }
  const auto [lo, hi] = std::minmax_element(bins.begin(), bins.end());
  h.first_bin = *lo;
  h.counts.assign(static_cast<std::size_t>(*hi - *lo + 1), 0);
  for (auto b : bins) ++h.counts[static_cast<std::size_t>(b - h.first_bin)];
  return h;
}

}  // namespace nuv
