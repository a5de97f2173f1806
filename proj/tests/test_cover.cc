#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "nuv/cover.h"
#include "nuv/error.h"
#include "nuv/models.h"
#include "nuv/shortest_path.h"
#include "oracles.h"

using namespace nuv;

namespace {

WeightedGraph unit_path(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.push_back({i - 1, i, 1.0});
  return WeightedGraph::from_edges(n, e);
}

DistanceMatrix to_matrix(const oracle::Matrix& m) {
  DistanceMatrix d(static_cast<Vertex>(m.size()));
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = 0; v < m.size(); ++v) d.at(u, v) = m[std::min(u, v)][std::max(u, v)];
  return d;
}

DistanceMatrix restrict(const DistanceMatrix& d, const std::vector<Vertex>& keep) {
  DistanceMatrix out(static_cast<Vertex>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = d(keep[i], keep[j]);
  return out;
}

}  // namespace

TEST_CASE("exact_cover_number examples") {
  const auto g = unit_path(5);
  const auto c = exact_cover_number(g, 1.0);
  CHECK(c.size == 2);
  // {0,3}, {1,3} and {1,4} all work; the lexicographic tie rule picks {0,3}.
  CHECK(c.centers == std::vector<Vertex>{0, 3});
  CHECK(is_cover(all_pairs_distances(g), std::vector<Vertex>{1, 3}, 1.0));
  CHECK(c.method == CoverMethod::kExact);

  const auto grid = gen_grid(3, 5);
  CHECK(exact_cover_number(grid, diameter(grid)).size == 1);
  CHECK(exact_cover_number(grid, diameter(grid)).centers == std::vector<Vertex>{0});

  CHECK_THROWS_AS(exact_cover_number(gen_grid(5, 1), 1.0), ThresholdError);
  CHECK_THROWS_AS(exact_cover_number(g, 0.0), InputError);
}

TEST_CASE("exact_cover_number equals full subset enumeration") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 10);
    const auto g = oracle::random_connected(rng, n, 0.25, trial % 2 == 0);
    const auto fw = oracle::floyd_warshall(g);
    const auto d = to_matrix(fw);
    const double dia = std::max(d.max(), 1.0);
    for (int k = 0; k < 4; ++k) {
      const double r = dia * (0.05 + 0.3 * k);
      const auto c = exact_cover_number(d, r);
      CHECK(c.size == oracle::subset_cover_number(fw, r));
      CHECK(is_cover(d, c.centers, r));
    }
  }
}

TEST_CASE("greedy_cover") {
  const auto g = unit_path(5);
  const auto c = greedy_cover(g, 1.0);
  CHECK(c.size <= 3);
  CHECK(c.size >= exact_cover_number(g, 1.0).size);
  CHECK(is_cover(all_pairs_distances(g), c.centers, 1.0));
  CHECK(greedy_cover(g, 4.0).size == 1);

  const auto grid = gen_grid(10, 8);
  const auto d = all_pairs_distances(grid);
  const auto gc = greedy_cover(d, 3.0);
  CHECK(is_cover(d, gc.centers, 3.0));
  CHECK(gc.method == CoverMethod::kGreedy);
  // Truncated sub-instances are small enough for the exact search.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vertex> keep(100);
    std::iota(keep.begin(), keep.end(), 0);
    std::shuffle(keep.begin(), keep.end(), rng);
    keep.resize(14);
    const auto sub = restrict(d, keep);
    CHECK(greedy_cover(sub, 3.0).size >= exact_cover_number(sub, 3.0).size);
  }
}

TEST_CASE("cover_profile examples") {
  const auto two = WeightedGraph::from_edges(2, {{0, 1, 7.5}});
  const auto p2 = cover_profile(all_pairs_distances(two), CoverMethod::kExact);
  CHECK(p2.at(0.0) == 2);
  CHECK(p2.at(7.49) == 2);
  CHECK(p2.at(7.5) == 1);
  CHECK(p2.at(100.0) == 1);

  const auto p3 = cover_profile(all_pairs_distances(unit_path(3)), CoverMethod::kExact);
  CHECK(p3.at(0.0) == 3);
  CHECK(p3.at(1.0) == 1);

  // 2 * integral over [0, 1.5] with N = 4 on [0,1) and 2 on [1,1.5).
  const auto p4 = cover_profile(all_pairs_distances(unit_path(4)), CoverMethod::kExact);
  CHECK(2.0 * p4.integral(1.5) == 10.0);

  CHECK_THROWS_AS(cover_profile(all_pairs_distances(unit_path(4)), CoverMethod::kWalkDerived),
                  InputError);
  CHECK_THROWS_AS(cover_profile(all_pairs_distances(gen_grid(5, 1)), CoverMethod::kExact),
                  ThresholdError);
}

TEST_CASE("exact profile is nonincreasing and below greedy") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 2 + static_cast<Vertex>(rng() % 9);
    const auto g = oracle::random_connected(rng, n, 0.3, trial % 2 == 0);
    const auto d = all_pairs_distances(g);
    const auto exact = cover_profile(d, CoverMethod::kExact);
    const auto greedy = cover_profile(d, CoverMethod::kGreedy);
    REQUIRE(exact.radii == greedy.radii);
    for (std::size_t j = 0; j < exact.radii.size(); ++j) {
      CHECK(exact.sizes[j] <= greedy.sizes[j]);
      if (j > 0) CHECK(exact.sizes[j] <= exact.sizes[j - 1]);
      if (exact.radii[j] > 0) CHECK(exact.sizes[j] == exact_cover_number(d, exact.radii[j]).size);
    }
    CHECK(exact.sizes.front() == n);
    CHECK(exact.sizes.back() == 1);
  }
}

TEST_CASE("thinned greedy profile stays an upper bound") {
  const auto g = gen_grid(4, 21);
  const auto d = all_pairs_distances(g);
  const auto exact = cover_profile(d, CoverMethod::kExact);
  const auto thin = cover_profile(d, CoverMethod::kGreedy, 8);
  CHECK(thin.radii.size() <= 8);
  CHECK(thin.radii.front() == 0.0);
  CHECK(thin.radii.back() == d.max());
  for (double r : exact.radii) CHECK(thin.at(r) >= exact.at(r));
  CHECK(thin.integral(d.max() / 2) >= exact.integral(d.max() / 2));
}

TEST_CASE("fit_profile_exponent") {
  const auto g = gen_grid(12, 4);
  const auto d = all_pairs_distances(g);
  const auto alpha = fit_profile_exponent(cover_profile(d, CoverMethod::kGreedy, 64), 144);
  REQUIRE(alpha);
  CHECK(*alpha > 0.5);
  CHECK_FALSE(fit_profile_exponent(CoverProfile{}, 3));
}

TEST_CASE("verify_proposition1 examples") {
  const auto g = unit_path(4);
  const double radii[] = {0.5, 1.0, 1.5, 3.0, 10.0};
  const auto rep = verify_proposition1(g, 0, radii);
  CHECK(rep.walk_length == 3.0);
  CHECK(rep.diameter == 3.0);
  CHECK(rep.cover_integral == 10.0);
  CHECK(rep.integral_pass);
  CHECK(rep.profile_method == CoverMethod::kExact);
  REQUIRE(rep.radii.size() == 5);
  for (const auto& c : rep.radii) {
    CHECK(c.pass);
    CHECK(c.walk_cover_valid);
    REQUIRE(c.exact_size);
  }
  // r >= L: inequality (i) reads N(r) <= 2 and the walk cover has one center.
  CHECK(rep.radii[4].walk_cover_size == 1);
  CHECK(rep.radii[4].bound == doctest::Approx(1.3));
  CHECK(rep.pass());
}

TEST_CASE("both inequalities hold on random instances") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 90; ++trial) {
    WeightedGraph g = trial % 3 == 0   ? gen_square(4 + rng() % 13, rng()).graph
                      : trial % 3 == 1 ? gen_mean_field(4 + rng() % 13, rng())
                                       : gen_grid(2 + rng() % 3, rng());
    const Vertex start = static_cast<Vertex>(rng() % g.num_vertices());
    const auto d = all_pairs_distances(g);
    const auto radii = default_radii(d, 8);
    const auto rep = verify_proposition1(g, start, radii);
    CHECK(rep.pass());
    const auto balls = check_ball_steps(d, nuv_walk(g, start), radii);
    CHECK(balls.violations == 0);
    CHECK(balls.balls == radii.size() * g.num_vertices());
  }
}

TEST_CASE("greedy route for larger graphs") {
  const auto g = gen_grid(8, 12);
  const double radii[] = {0.5, 2.0, 5.0};
  const auto rep = verify_proposition1(g, 3, radii);
  CHECK(rep.profile_method == CoverMethod::kGreedy);
  for (const auto& c : rep.radii) CHECK_FALSE(c.exact_size);
  CHECK(rep.pass());
}
