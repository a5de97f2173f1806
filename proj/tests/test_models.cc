#include <cmath>

#include "doctest.h"
#include "nuv/error.h"
#include "nuv/models.h"
#include "nuv/rng.h"

using namespace nuv;

TEST_CASE("Rng is reproducible and in range") {
  Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform_open();
    CHECK(u == b.uniform_open());
    CHECK(u > 0.0);
    CHECK(u < 1.0);
  }
  Rng c(1);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) != derive_seed(2, 0));
  // The standard fixes mt19937_64's 10000th output for the default seed.
  std::mt19937_64 ref;
  ref.discard(9999);
  CHECK(ref() == 9981545732273789042ULL);
}

TEST_CASE("exponential sampler moments") {
  // Mean and variance within 3 standard errors at 10^5 draws.
  Rng rng(2718);
  const int draws = 100000;
  const double mean = 3.0;
  double s = 0, s2 = 0, s4 = 0;
  std::vector<double> xs(draws);
  for (auto& x : xs) {
    x = rng.exponential(mean);
    CHECK(x > 0.0);
    s += x;
  }
  const double m = s / draws;
  for (double x : xs) {
    s2 += (x - m) * (x - m);
  }
  const double var = s2 / (draws - 1);
  for (double x : xs) s4 += std::pow(x - m, 4);
  const double m4 = s4 / draws;
  CHECK(std::abs(m - mean) < 3 * mean / std::sqrt(draws));
  const double var_se = std::sqrt((m4 - var * var) / draws);
  CHECK(std::abs(var - mean * mean) < 3 * var_se);
}

TEST_CASE("gen_square") {
  const auto two = gen_square(2, 9);
  REQUIRE(two.points.size() == 2);
  CHECK(two.graph.num_edges() == 1);
  CHECK(two.graph.length(0, 1) == euclidean_distance(two.points[0], two.points[1]));

  const auto a = gen_square(50, 123), b = gen_square(50, 123);
  for (int i = 0; i < 50; ++i) {
    CHECK(a.points[i].x == b.points[i].x);
    CHECK(a.points[i].y == b.points[i].y);
    CHECK(a.points[i].x >= 0.0);
    CHECK(a.points[i].x <= 1.0);
  }
  const auto nn = gen_square(50, 123, Scaling::kNearestNeighbor);
  for (int i = 0; i < 50; ++i) CHECK(nn.points[i].x == doctest::Approx(a.points[i].x * std::sqrt(50.0)));
  for (int u = 0; u < 50; ++u)
    for (int v = u + 1; v < 50; ++v) {
      const double dx = a.points[u].x - a.points[v].x, dy = a.points[u].y - a.points[v].y;
      CHECK(a.graph.length(u, v) == doctest::Approx(std::sqrt(dx * dx + dy * dy)).epsilon(1e-12));
    }
  CHECK_THROWS_AS(gen_square(1, 0), InputError);
}

TEST_CASE("gen_grid") {
  const auto g = gen_grid(2, 1);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 4);
  const auto g10 = gen_grid(10, 1);
  CHECK(g10.num_edges() == 2 * 10 * 9);
  CHECK(g10.length(0, 1) < kInfinity);
  CHECK(g10.length(0, 10) < kInfinity);
  CHECK(g10.length(0, 11) == kInfinity);
  CHECK(g10.length(9, 10) == kInfinity);  // no wrap-around

  const auto a = gen_grid(6, 55), b = gen_grid(6, 55);
  const auto ea = a.edges(), eb = b.edges();
  REQUIRE(ea.size() == eb.size());
  for (std::size_t i = 0; i < ea.size(); ++i) CHECK(ea[i].length == eb[i].length);

  // First draws go to edges (0,1) then (0,m): lexicographic order.
  Rng rng(55);
  const double first = rng.exponential(1.0);
  const double second = rng.exponential(1.0);
  CHECK(a.length(0, 1) == first);
  CHECK(a.length(0, 6) == second);

  const auto u = gen_grid(6, 55, LengthLaw::kUniform);
  for (const auto& e : u.edges()) CHECK(e.length < 1.0);
  CHECK_THROWS_AS(gen_grid(1, 0), InputError);
}

TEST_CASE("gen_mean_field") {
  // n = 2: one Exponential(mean 2) edge; sample mean over 10^4 seeds within 5%.
  double total = 0.0;
  for (std::uint64_t s = 0; s < 10000; ++s) total += gen_mean_field(2, s).length(0, 1);
  CHECK(total / 10000 == doctest::Approx(2.0).epsilon(0.05));

  const auto a = gen_mean_field(30, 4), b = gen_mean_field(30, 4);
  CHECK(a.is_complete());
  CHECK(a.num_edges() == 435);
  for (Vertex u = 0; u < 30; ++u)
    for (Vertex v = 0; v < 30; ++v) CHECK(a.length(u, v) == b.length(u, v));
  Rng rng(4);
  CHECK(a.length(0, 1) == rng.exponential(30.0));
  CHECK(a.length(0, 2) == rng.exponential(30.0));
}

TEST_CASE("gen_linear") {
  CHECK(gen_linear(2).length(0, 1) == 0.75);
  const auto g3 = gen_linear(3);
  CHECK(g3.length(0, 1) == doctest::Approx(1.0 - 1.0 / 9));
  CHECK(g3.length(1, 2) == doctest::Approx(1.0 - 2.0 / 9));
  CHECK(g3.num_edges() == 2);
}

TEST_CASE("InstanceSpec and parsing") {
  CHECK(parse_model("mean-field") == Model::kMeanField);
  CHECK(parse_model("mean_field") == Model::kMeanField);
  CHECK_THROWS_AS(parse_model("torus"), InputError);
  CHECK(parse_scaling("nearest-neighbor") == Scaling::kNearestNeighbor);
  CHECK_THROWS_AS(parse_length_law("pareto"), InputError);

  InstanceSpec spec{.model = Model::kGrid, .size = 4, .seed = 1};
  CHECK(spec.num_vertices() == 16);
  CHECK(generate(spec).graph.num_vertices() == 16);
  spec.size = 1;
  CHECK_THROWS_AS(spec.validate(), InputError);
  InstanceSpec sq{.model = Model::kSquare, .size = 10, .seed = 3};
  CHECK(generate(sq).points.size() == 10);
}
