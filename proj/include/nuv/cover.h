#ifndef NUV_COVER_H_
#define NUV_COVER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nuv/cover_result.h"
#include "nuv/graph.h"
#include "nuv/shortest_path.h"
#include "nuv/walk.h"

namespace nuv {

inline constexpr Vertex kExactCoverThreshold = 18;

// Relative tolerance for comparisons between quantities computed along
// different floating-point routes (walk prefix sums vs. matrix entries).
inline constexpr double kRelativeSlack = 1e-9;

// True iff every vertex is within radius * (1 + rel_slack) of some center.
bool is_cover(const DistanceMatrix& d, std::span<const Vertex> centers,
              double radius, double rel_slack = 0.0);

// Minimum-cardinality center set; among minimum sets, the lexicographically
// smallest. Throws ThresholdError when n > threshold.
CoverResult exact_cover_number(const DistanceMatrix& d, double radius,
                               Vertex threshold = kExactCoverThreshold);
CoverResult exact_cover_number(const WeightedGraph& g, double radius,
                               Vertex threshold = kExactCoverThreshold);

// Repeatedly takes the center covering the most uncovered vertices (ties by
// smallest index).
CoverResult greedy_cover(const DistanceMatrix& d, double radius);
CoverResult greedy_cover(const WeightedGraph& g, double radius);

// Nonincreasing step function r -> N_hat(r), right-continuous, constant on
// [radii[j], radii[j+1]). radii[0] == 0.
struct CoverProfile {
  CoverMethod method = CoverMethod::kExact;
  std::vector<double> radii;
  std::vector<int> sizes;

  int at(double r) const;
  // Exact integral of the step function over [0, upper].
  double integral(double upper) const;
};

// Evaluates the cover number at the breakpoints of the distance matrix (its
// distinct entries, including 0), then replaces each value by the minimum
// over all smaller breakpoints, which stays a valid cover size because a
// cover at a smaller radius remains one at a larger radius.
//
// With max_breakpoints > 0 and more breakpoints than that, an evenly spaced
// subset (always including 0 and the largest) is evaluated; holding each
// value until the next evaluated breakpoint overestimates N, so the profile
// remains an upper bound.
CoverProfile cover_profile(const DistanceMatrix& d, CoverMethod method,
                           std::size_t max_breakpoints = 0,
                           Vertex exact_threshold = kExactCoverThreshold);

// Least-squares slope of log(N_hat / n) against log r over the breakpoints
// with 1 < N_hat < n. Returns -slope, i.e. alpha in N(r)/n ~ r^-alpha.
// nullopt with fewer than two usable points.
std::optional<double> fit_profile_exponent(const CoverProfile& profile, Vertex n);

struct RadiusCheck {
  double radius = 0.0;
  double bound = 0.0;  // 1 + L / r
  std::optional<int> exact_size;
  int walk_cover_size = 0;
  bool walk_cover_valid = false;
  bool pass = false;
};

struct Proposition1Report {
  Vertex start = 0;
  double walk_length = 0.0;
  double diameter = 0.0;
  std::vector<RadiusCheck> radii;
  CoverMethod profile_method = CoverMethod::kExact;
  // 2 * integral of N_hat over [0, diameter / 2].
  double cover_integral = 0.0;
  bool integral_pass = false;

  bool pass() const;
};

struct VerifyOptions {
  Vertex exact_threshold = kExactCoverThreshold;
  // Passed to cover_profile for the greedy profile; the exact profile always
  // uses every breakpoint.
  std::size_t max_breakpoints = 512;
};

// Checks N(r) <= 1 + L/r at each radius (exactly when n <= threshold, and
// always through the walk-derived cover) and L <= 2 * integral of the cover
// profile over [0, diameter / 2].
Proposition1Report verify_proposition1(const WeightedGraph& g, Vertex start,
                                       std::span<const double> radii,
                                       VerifyOptions options = {});
Proposition1Report verify_proposition1(const WeightedGraph& g,
                                       const DistanceMatrix& d,
                                       const WalkResult& walk,
                                       std::span<const double> radii,
                                       VerifyOptions options = {});

// `count` radii spaced geometrically from the smallest positive distance to
// the diameter.
std::vector<double> default_radii(const DistanceMatrix& d, std::size_t count = 12);

struct BallStepCheck {
  std::size_t balls = 0;
  std::size_t violations = 0;  // balls with two or more long steps
};

// For every center and radius r, counts the vertices of B(center, r) whose
// departure step exceeds 2r. Within any ball at most one such vertex can
// exist: the last-visited vertex of the ball.
BallStepCheck check_ball_steps(const DistanceMatrix& d, const WalkResult& walk,
                               std::span<const double> radii);

}  // namespace nuv

#endif  // NUV_COVER_H_
