#include "nuv/cover.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <queue>
#include <string>
#include <tuple>

#include "nuv/error.h"

namespace nuv {
namespace {

void check_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InputError("cover radius must be positive and finite");
  }
}

// Ball masks for n <= 32.
std::vector<std::uint32_t> small_balls(const DistanceMatrix& d, double r) {
  const Vertex n = d.size();
  std::vector<std::uint32_t> balls(n, 0);
  for (Vertex c = 0; c < n; ++c) {
    for (Vertex v = 0; v < n; ++v) {
      if (d(c, v) <= r) balls[c] |= std::uint32_t{1} << v;
    }
  }
  return balls;
}

class ExactCoverSearch {
 public:
  explicit ExactCoverSearch(std::vector<std::uint32_t> balls)
      : balls_(std::move(balls)), n_(static_cast<int>(balls_.size())) {
    for (auto b : balls_) max_ball_ = std::max(max_ball_, std::popcount(b));
  }

  int minimum_size() {
    const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0}
                                       : (std::uint32_t{1} << n_) - 1;
    for (int k = 1; k <= n_; ++k) {
      if (feasible(all, k)) return k;
    }
    return n_;
  }

  // Lexicographically smallest cover with exactly k centers.
  std::vector<Vertex> smallest_cover(int k) {
    const std::uint32_t all = n_ == 32 ? ~std::uint32_t{0}
                                       : (std::uint32_t{1} << n_) - 1;
    chosen_.clear();
    lex_search(all, k, 0);
    return chosen_;
  }

 private:
  bool hopeless(std::uint32_t uncovered, int slots) const {
    return std::popcount(uncovered) > slots * max_ball_;
  }

  // Some member of the ball of every uncovered vertex must be picked; branch
  // on the uncovered vertex with the fewest candidates.
  bool feasible(std::uint32_t uncovered, int slots) const {
    if (uncovered == 0) return true;
    if (slots == 0 || hopeless(uncovered, slots)) return false;
    int best_u = -1, best_count = n_ + 1;
    for (std::uint32_t m = uncovered; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int c = std::popcount(balls_[u]);
      if (c < best_count) {
        best_count = c;
        best_u = u;
      }
    }
    for (std::uint32_t m = balls_[best_u]; m != 0; m &= m - 1) {
      const int c = std::countr_zero(m);
      if (feasible(uncovered & ~balls_[c], slots - 1)) return true;
    }
    return false;
  }

  bool lex_search(std::uint32_t uncovered, int slots, int next) {
    if (uncovered == 0) return true;
    if (slots == 0 || hopeless(uncovered, slots)) return false;
    // Every uncovered vertex still needs a center at index >= next, so the
    // next pick cannot exceed the smallest "largest coverer".
    int limit = n_ - 1;
    for (std::uint32_t m = uncovered; m != 0; m &= m - 1) {
      const int u = std::countr_zero(m);
      limit = std::min(limit, 31 - std::countl_zero(balls_[u]));
    }
    for (int c = next; c <= limit; ++c) {
      chosen_.push_back(c);
      if (lex_search(uncovered & ~balls_[c], slots - 1, c + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<std::uint32_t> balls_;
  int n_;
  int max_ball_ = 0;
  std::vector<Vertex> chosen_;
};

}  // namespace

bool is_cover(const DistanceMatrix& d, std::span<const Vertex> centers,
              double radius, double rel_slack) {
  const double limit = radius * (1.0 + rel_slack);
  for (Vertex v = 0; v < d.size(); ++v) {
    const bool covered = std::any_of(centers.begin(), centers.end(),
                                     [&](Vertex c) { return d(c, v) <= limit; });
    if (!covered) return false;
  }
  return true;
}

CoverResult exact_cover_number(const DistanceMatrix& d, double radius,
                               Vertex threshold) {
  check_radius(radius);
  if (d.size() > threshold || d.size() > 32) {
    throw ThresholdError("exact cover number is limited to n <= " +
                         std::to_string(std::min<Vertex>(threshold, 32)) +
                         " (got n = " + std::to_string(d.size()) +
                         "); use the greedy method");
  }
  ExactCoverSearch search(small_balls(d, radius));
  CoverResult out;
  out.radius = radius;
  out.method = CoverMethod::kExact;
  out.centers = search.smallest_cover(search.minimum_size());
  out.size = static_cast<int>(out.centers.size());
  if (!is_cover(d, out.centers, radius)) {
    throw std::logic_error("exact cover failed verification");
  }
  return out;
}

CoverResult exact_cover_number(const WeightedGraph& g, double radius,
                               Vertex threshold) {
  if (g.num_vertices() > threshold) {
    throw ThresholdError("exact cover number is limited to n <= " +
                         std::to_string(threshold) + " (got n = " +
                         std::to_string(g.num_vertices()) +
                         "); use the greedy method");
  }
  return exact_cover_number(all_pairs_distances(g), radius, threshold);
}

CoverResult greedy_cover(const DistanceMatrix& d, double radius) {
  check_radius(radius);
  const Vertex n = d.size();
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> balls(static_cast<std::size_t>(n) * words, 0);
  for (Vertex c = 0; c < n; ++c) {
    const auto row = d.row(c);
    std::uint64_t* ball = &balls[c * words];
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] <= radius) ball[v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }
  std::vector<std::uint64_t> uncovered(words, ~std::uint64_t{0});
  if (n % 64 != 0) uncovered.back() = (std::uint64_t{1} << (n % 64)) - 1;
  auto gain = [&](Vertex c) {
    int total = 0;
    const std::uint64_t* ball = &balls[c * words];
    for (std::size_t k = 0; k < words; ++k) total += std::popcount(ball[k] & uncovered[k]);
    return total;
  };

  // Lazy greedy: stored gains only overestimate, so a popped candidate whose
  // refreshed gain still beats the next stored entry is the true maximum.
  // Heap order is (gain desc, index asc).
  using Entry = std::pair<int, Vertex>;
  auto worse = [](const Entry& a, const Entry& b) {
    return std::tie(a.first, b.second) < std::tie(b.first, a.second);
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (Vertex c = 0; c < n; ++c) heap.emplace(gain(c), c);

  CoverResult out;
  out.radius = radius;
  out.method = CoverMethod::kGreedy;
  int remaining = n;
  while (remaining > 0) {
    auto top = heap.top();
    heap.pop();
    const int fresh = gain(top.second);
    if (fresh == top.first || heap.empty() || !worse(Entry{fresh, top.second}, heap.top())) {
      const std::uint64_t* ball = &balls[top.second * words];
      for (std::size_t k = 0; k < words; ++k) uncovered[k] &= ~ball[k];
      remaining -= fresh;
      out.centers.push_back(top.second);
    } else {
      heap.emplace(fresh, top.second);
    }
  }
  std::sort(out.centers.begin(), out.centers.end());
  out.size = static_cast<int>(out.centers.size());
  if (!is_cover(d, out.centers, radius)) {
    throw std::logic_error("greedy cover failed verification");
  }
  return out;
}

CoverResult greedy_cover(const WeightedGraph& g, double radius) {
  return greedy_cover(all_pairs_distances(g), radius);
}

int CoverProfile::at(double r) const {
  const auto it = std::upper_bound(radii.begin(), radii.end(), r);
  if (it == radii.begin()) return sizes.empty() ? 0 : sizes.front();
  return sizes[static_cast<std::size_t>(it - radii.begin()) - 1];
}

double CoverProfile::integral(double upper) const {
  double total = 0.0;
  for (std::size_t j = 0; j < radii.size() && radii[j] < upper; ++j) {
    const double hi = j + 1 < radii.size() ? std::min(radii[j + 1], upper) : upper;
    total += sizes[j] * (hi - radii[j]);
  }
  return total;
}

CoverProfile cover_profile(const DistanceMatrix& d, CoverMethod method,
                           std::size_t max_breakpoints, Vertex exact_threshold) {
  if (method == CoverMethod::kWalkDerived) {
    throw InputError("cover profile method must be exact or greedy");
  }
  const Vertex n = d.size();
  if (method == CoverMethod::kExact && n > exact_threshold) {
    throw ThresholdError("exact cover profile is limited to n <= " +
                         std::to_string(exact_threshold) + " (got n = " +
                         std::to_string(n) + "); use the greedy method");
  }
  std::vector<double> breaks{0.0};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) breaks.push_back(d(u, v));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  if (method == CoverMethod::kGreedy && max_breakpoints > 1 &&
      breaks.size() > max_breakpoints) {
    std::vector<double> thinned;
    const std::size_t last = breaks.size() - 1;
    for (std::size_t j = 0; j < max_breakpoints; ++j) {
      const std::size_t idx = (j * last + (max_breakpoints - 1) / 2) / (max_breakpoints - 1);
      if (thinned.empty() || breaks[idx] != thinned.back()) thinned.push_back(breaks[idx]);
    }
    breaks = std::move(thinned);
  }

  CoverProfile profile;
  profile.method = method;
  profile.radii = breaks;
  profile.sizes.reserve(breaks.size());
  int running = n;
  for (double r : breaks) {
    int size = n;  // radius 0: every vertex is its own center
    if (r > 0.0) {
      size = method == CoverMethod::kExact ? exact_cover_number(d, r, exact_threshold).size
                                           : greedy_cover(d, r).size;
    }
    running = std::min(running, size);
    profile.sizes.push_back(running);
  }
  return profile;
}

std::optional<double> fit_profile_exponent(const CoverProfile& profile, Vertex n) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t j = 0; j < profile.radii.size(); ++j) {
    const int s = profile.sizes[j];
    if (profile.radii[j] <= 0.0 || s <= 1 || s >= n) continue;
    const double x = std::log(profile.radii[j]);
    const double y = std::log(static_cast<double>(s) / n);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return std::nullopt;
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return -(count * sxy - sx * sy) / denom;
}

bool Proposition1Report::pass() const {
  return integral_pass && std::all_of(radii.begin(), radii.end(),
                                      [](const RadiusCheck& c) { return c.pass; });
}

Proposition1Report verify_proposition1(const WeightedGraph& g, Vertex start,
                                       std::span<const double> radii,
                                       VerifyOptions options) {
  g.check_vertex(start);
  const auto d = all_pairs_distances(g);
  return verify_proposition1(g, d, nuv_walk(g, start), radii, options);
}

Proposition1Report verify_proposition1(const WeightedGraph& g,
                                       const DistanceMatrix& d,
                                       const WalkResult& walk,
                                       std::span<const double> radii,
                                       VerifyOptions options) {
  const Vertex n = g.num_vertices();
  const bool exact = n <= options.exact_threshold;

  Proposition1Report report;
  report.start = walk.start;
  report.walk_length = walk.total_length;
  report.diameter = d.max();
  for (double r : radii) {
    check_radius(r);
    RadiusCheck check;
    check.radius = r;
    check.bound = 1.0 + walk.total_length / r;
    bool ok = true;
    if (exact) {
      check.exact_size = exact_cover_number(d, r, options.exact_threshold).size;
      ok = *check.exact_size <= check.bound;
    }
    const auto walk_cover = walk_cover_selection(walk, r);
    check.walk_cover_size = walk_cover.size;
    check.walk_cover_valid = is_cover(d, walk_cover.centers, r, kRelativeSlack);
    check.pass = ok && check.walk_cover_valid && walk_cover.size <= check.bound;
    report.radii.push_back(check);
  }

  report.profile_method = exact ? CoverMethod::kExact : CoverMethod::kGreedy;
  const auto profile = cover_profile(d, report.profile_method,
                                     options.max_breakpoints, options.exact_threshold);
  report.cover_integral = 2.0 * profile.integral(report.diameter / 2.0);
  report.integral_pass = report.walk_length <= report.cover_integral;
  return report;
}

std::vector<double> default_radii(const DistanceMatrix& d, std::size_t count) {
  const Vertex n = d.size();
  double lo = kInfinity;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) lo = std::min(lo, d(u, v));
  }
  const double hi = d.max();
  if (n < 2 || count == 0) return {};
  if (count == 1 || lo >= hi) return {hi};
  std::vector<double> out;
  const double ratio = std::log(hi / lo);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(lo * std::exp(ratio * static_cast<double>(k) / (count - 1)));
  }
  return out;
}

BallStepCheck check_ball_steps(const DistanceMatrix& d, const WalkResult& walk,
                               std::span<const double> radii) {
  const auto departure = walk.departure_distances();
  BallStepCheck out;
  for (double r : radii) {
    const double limit = 2.0 * r * (1.0 + kRelativeSlack);
    for (Vertex c = 0; c < d.size(); ++c) {
      const auto row = d.row(c);
      int long_steps = 0;
      for (Vertex v = 0; v < d.size(); ++v) {
        if (row[v] <= r && departure[v] > limit) ++long_steps;
      }
      ++out.balls;
      if (long_steps > 1) ++out.violations;
    }
  }
  return out;
}

}  // namespace nuv
