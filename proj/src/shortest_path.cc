#include "nuv/shortest_path.h"

#include <algorithm>
#include <string>

#include "nuv/error.h"

namespace nuv {

void DijkstraSearch::reset() {
  for (Vertex v : touched_) {
    dist_[v] = kInfinity;
    pred_[v] = -1;
    settled_[v] = 0;
  }
  touched_.clear();
  heap_ = {};
}

std::vector<Vertex> DijkstraSearch::path_to(Vertex v) const {
  std::vector<Vertex> path;
  for (Vertex x = v; x != -1; x = pred_[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

double DistanceMatrix::max() const {
  return d_.empty() ? 0.0 : *std::max_element(d_.begin(), d_.end());
}

PathResult shortest_path(const WeightedGraph& g, Vertex source, Vertex target) {
  g.check_vertex(source);
  g.check_vertex(target);
  if (source == target) return {target, 0.0, {source}};
  if (g.is_metric()) return {target, g.length(source, target), {source, target}};

  const Vertex lo = std::min(source, target);
  const Vertex hi = std::max(source, target);
  DijkstraSearch search(g);
  search.run(lo, [hi](Vertex v) { return v == hi; });
  PathResult out{target, search.distance(hi), search.path_to(hi)};
  if (source != lo) std::reverse(out.path.begin(), out.path.end());
  return out;
}

PathResult nearest_unvisited(const WeightedGraph& g, Vertex source,
                             std::span<const std::uint8_t> visited) {
  g.check_vertex(source);
  if (visited.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw InputError("visited mask must have one entry per vertex");
  }
  if (std::all_of(visited.begin(), visited.end(),
                  [](std::uint8_t x) { return x != 0; })) {
    throw InputError("every vertex is already visited");
  }

  if (g.is_metric()) {
    Vertex best = -1;
    double best_d = kInfinity;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (visited[v] || v == source) continue;
      const double d = g.length(source, v);
      if (d < best_d) {
        best_d = d;
        best = v;
      }
    }
    return {best, best_d, {source, best}};
  }

  DijkstraSearch search(g);
  const Vertex t =
      search.run(source, [&](Vertex v) { return visited[v] == 0 && v != source; });
  return {t, search.distance(t), search.path_to(t)};
}

PathResult nearest_unvisited(const WeightedGraph& g, Vertex source,
                             std::span<const Vertex> visited_list) {
  std::vector<std::uint8_t> mask(g.num_vertices(), 0);
  for (Vertex v : visited_list) {
    g.check_vertex(v);
    mask[v] = 1;
  }
  return nearest_unvisited(g, source, mask);
}

DistanceMatrix all_pairs_distances(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  DistanceMatrix d(n);
  if (g.is_metric()) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) d.at(u, v) = d.at(v, u) = g.length(u, v);
    }
    return d;
  }
  DijkstraSearch search(g);
  for (Vertex u = 0; u < n; ++u) {
    search.run_all(u);
    for (Vertex v = u + 1; v < n; ++v) {
      d.at(u, v) = d.at(v, u) = search.distance(v);
    }
  }
  return d;
}

double diameter(const WeightedGraph& g) {
  const Vertex n = g.num_vertices();
  double best = 0.0;
  if (g.is_metric()) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) best = std::max(best, g.length(u, v));
    }
    return best;
  }
  DijkstraSearch search(g);
  for (Vertex u = 0; u + 1 < n; ++u) {
    search.run_all(u);
    for (Vertex v = u + 1; v < n; ++v) best = std::max(best, search.distance(v));
  }
  return best;
}

}  // namespace nuv
