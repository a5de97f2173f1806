#include <random>
#include <sstream>

#include "doctest.h"
#include "nuv/error.h"
#include "nuv/graph.h"
#include "nuv/io.h"
#include "nuv/models.h"
#include "nuv/shortest_path.h"
#include "oracles.h"

using namespace nuv;

namespace {

WeightedGraph triangle() { return WeightedGraph::from_edges(3, {{0, 1, 1}, {1, 2, 2}, {0, 2, 4}}); }

WeightedGraph unit_path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.push_back({i - 1, i, 1.0});
  return WeightedGraph::from_edges(n, e);
}

WeightedGraph unit_grid(Vertex m) {
  std::vector<Edge> e;
  for (Vertex r = 0; r < m; ++r)
    for (Vertex c = 0; c < m; ++c) {
      if (c + 1 < m) e.push_back({r * m + c, r * m + c + 1, 1.0});
      if (r + 1 < m) e.push_back({r * m + c, (r + 1) * m + c, 1.0});
    }
  return WeightedGraph::from_edges(m * m, e);
}

// Shortest simple-path length by exhaustive DFS over all simple paths.
double enumerate_paths(const WeightedGraph& g, Vertex from, Vertex to) {
  std::vector<bool> on(g.num_vertices(), false);
  double best = kInfinity;
  std::function<void(Vertex, double)> dfs = [&](Vertex u, double len) {
    if (u == to) {
      best = std::min(best, len);
      return;
    }
    on[u] = true;
    g.for_each_neighbor(u, [&](Vertex v, double l) {
      if (!on[v]) dfs(v, len + l);
    });
    on[u] = false;
  };
  dfs(from, 0.0);
  return best;
}

}  // namespace

TEST_CASE("construction rejects invalid input") {
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, 0.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, -1.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, kInfinity}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 0, 1.0}, {0, 1, 1.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 1, 1.0}, {1, 0, 2.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::from_edges(3, {{0, 1, 1.0}}), InputError);  // disconnected
  CHECK_THROWS_AS(WeightedGraph::from_edges(2, {{0, 2, 1.0}}), InputError);
  CHECK_THROWS_AS(WeightedGraph::complete(2, {0, 1, 2, 0}), InputError);  // asymmetric
  CHECK_THROWS_AS(WeightedGraph::euclidean({{0, 0}, {0, 0}}), InputError);
  CHECK_NOTHROW(WeightedGraph::from_edges(1, {}));
}

TEST_CASE("shortest_path examples") {
  const auto two = WeightedGraph::from_edges(2, {{0, 1, 7.5}});
  auto p = shortest_path(two, 0, 1);
  CHECK(p.distance == 7.5);
  CHECK(p.path == std::vector<Vertex>{0, 1});

  p = shortest_path(triangle(), 0, 2);
  CHECK(p.distance == 3.0);
  CHECK(p.path == std::vector<Vertex>{0, 1, 2});
  p = shortest_path(triangle(), 2, 0);
  CHECK(p.path == std::vector<Vertex>{2, 1, 0});

  const auto grid = unit_grid(5);
  const double expected = enumerate_paths(grid, 0, 24);
  CHECK(expected == 8.0);
  CHECK(shortest_path(grid, 0, 24).distance == expected);

  CHECK_THROWS_AS(shortest_path(two, 0, 2), InputError);
  CHECK_THROWS_AS(shortest_path(two, -1, 0), InputError);
}

TEST_CASE("shortest_path prefers the smaller predecessor among equal routes") {
  // 0-1-3 and 0-2-3 both have length 2.
  const auto g = WeightedGraph::from_edges(4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 1}, {2, 3, 1}});
  CHECK(shortest_path(g, 0, 3).path == std::vector<Vertex>{0, 1, 3});
}

TEST_CASE("nearest_unvisited examples") {
  const auto p = nearest_unvisited(unit_path(3), 0, std::vector<Vertex>{0});
  CHECK(p.target == 1);
  CHECK(p.distance == 1.0);

  const auto q = nearest_unvisited(triangle(), 2, std::vector<Vertex>{1, 2});
  CHECK(q.target == 0);
  CHECK(q.distance == 3.0);
  CHECK(q.path == std::vector<Vertex>{2, 1, 0});

  CHECK_THROWS_AS(nearest_unvisited(triangle(), 0, std::vector<Vertex>{0, 1, 2}), InputError);
}

TEST_CASE("nearest_unvisited on mean-field n=8 matches the full-distance argmin") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = gen_mean_field(8, seed);
    const auto d = oracle::floyd_warshall(g);
    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::uint8_t> visited(8, 0);
      const Vertex s = static_cast<Vertex>(rng() % 8);
      visited[s] = 1;
      for (Vertex v = 0; v < 8; ++v)
        if (rng() % 2) visited[v] = 1;
      if (std::all_of(visited.begin(), visited.end(), [](auto x) { return x; })) continue;
      Vertex best = -1;
      for (Vertex v = 0; v < 8; ++v)
        if (!visited[v] && (best < 0 || d[s][v] < d[s][best])) best = v;
      const auto got = nearest_unvisited(g, s, visited);
      CHECK(got.target == best);
      CHECK(got.distance == doctest::Approx(d[s][best]).epsilon(1e-12));
    }
  }
}

TEST_CASE("nearest_unvisited matches explicit argmin on random small graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 29);
    const bool ints = trial % 2 == 0;
    const auto g = oracle::random_connected(rng, n, 0.15, ints);
    const auto d = oracle::floyd_warshall(g);
    std::vector<std::uint8_t> visited(n, 0);
    const Vertex s = static_cast<Vertex>(rng() % n);
    visited[s] = 1;
    for (Vertex v = 0; v < n; ++v)
      if (rng() % 3 == 0) visited[v] = 1;
    if (std::all_of(visited.begin(), visited.end(), [](auto x) { return x; })) continue;
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!visited[v] && (best < 0 || d[s][v] < d[s][best])) best = v;
    const auto got = nearest_unvisited(g, s, visited);
    CHECK(got.target == best);
    // Path sums to the distance and follows graph edges.
    double along = 0.0;
    for (std::size_t i = 1; i < got.path.size(); ++i) {
      const double len = g.length(got.path[i - 1], got.path[i]);
      REQUIRE(len < kInfinity);
      along += len;
    }
    CHECK(along == doctest::Approx(got.distance).epsilon(1e-9));
  }
}

TEST_CASE("all_pairs_distances and diameter") {
  const auto two = WeightedGraph::from_edges(2, {{0, 1, 7.5}});
  const auto d2 = all_pairs_distances(two);
  CHECK(d2(0, 0) == 0.0);
  CHECK(d2(0, 1) == 7.5);
  CHECK(d2(1, 0) == 7.5);
  CHECK(all_pairs_distances(triangle())(0, 2) == 3.0);
  CHECK(diameter(unit_path(3)) == 2.0);
  CHECK(diameter(triangle()) == 3.0);

  const auto grid = gen_grid(4, 99);
  const auto d = all_pairs_distances(grid);
  for (Vertex u = 0; u < 16; ++u)
    for (Vertex v = 0; v < 16; ++v) CHECK(d(u, v) == shortest_path(grid, u, v).distance);
  CHECK(diameter(grid) == d.max());
}

TEST_CASE("distance properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 25);
    const auto g = oracle::random_connected(rng, n, 0.2, trial % 3 == 0);
    const auto d = all_pairs_distances(g);
    const auto fw = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) {
        CHECK(d(u, v) == doctest::Approx(fw[u][v]).epsilon(1e-12));
        CHECK(shortest_path(g, u, v).distance == shortest_path(g, v, u).distance);
      }
    for (int k = 0; k < 50; ++k) {
      const Vertex a = rng() % n, b = rng() % n, c = rng() % n;
      CHECK(d(a, c) <= (d(a, b) + d(b, c)) * (1 + 1e-12));
    }
  }
}

TEST_CASE("Euclidean model: shortest paths are direct edges") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = gen_square(40, seed);
    const auto& g = inst.graph;
    CHECK(g.is_metric());
    // Dijkstra over the same lengths, stored densely, without the metric shortcut.
    std::vector<double> matrix(40 * 40);
    for (Vertex u = 0; u < 40; ++u)
      for (Vertex v = 0; v < 40; ++v) matrix[u * 40 + v] = g.length(u, v);
    const auto dense = WeightedGraph::complete(40, matrix);
    const auto d = all_pairs_distances(dense);
    for (Vertex u = 0; u < 40; ++u)
      for (Vertex v = 0; v < 40; ++v)
        CHECK(d(u, v) == doctest::Approx(g.length(u, v)).epsilon(1e-12));
  }
}

TEST_CASE("graph interchange format") {
  SUBCASE("round trip preserves every length exactly") {
    for (const auto& g : {gen_grid(5, 3), gen_mean_field(7, 4), gen_linear(9)}) {
      std::stringstream ss;
      write_graph(ss, g);
      const auto back = read_graph(ss);
      REQUIRE(back.num_vertices() == g.num_vertices());
      REQUIRE(back.num_edges() == g.num_edges());
      CHECK(back.is_complete() == g.is_complete());
      for (const auto& e : g.edges()) CHECK(back.length(e.u, e.v) == e.length);
    }
  }
  SUBCASE("malformed input") {
    for (const char* text : {"", "3\n", "2 1\n0 1\n", "2 1\n0 1 x\n", "2 2\n0 1 1\n",
                             "3 1\n0 1 1\n", "2 1\n0 1 1\n1 0 1\n", "2 1\n0 1 -2\n"}) {
      std::stringstream ss(text);
      CHECK_THROWS_AS(read_graph(ss), InputError);
    }
  }
  SUBCASE("comments and blank lines") {
    std::stringstream ss("# triangle\n3 3\n\n0 1 1\n1 2 2 # short\n0 2 4\n");
    const auto g = read_graph(ss);
    CHECK(g.is_complete());
    CHECK(shortest_path(g, 0, 2).distance == 3.0);
  }
}
