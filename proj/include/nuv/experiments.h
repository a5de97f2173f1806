#ifndef NUV_EXPERIMENTS_H_
#define NUV_EXPERIMENTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nuv/graph.h"
#include "nuv/models.h"
#include "nuv/walk.h"

namespace nuv {

enum class Statistic {
  kLength,
  kNormalizedLength,
  kSd,
  kVarianceDecomposition,
  kStartRatio,
  kDiameter,
  kMst,
  kCoverProfile,
  kTsp,
};

std::string_view to_string(Statistic s);
Statistic parse_statistic(std::string_view name);

// Size limits for the per-graph statistics.
inline constexpr Vertex kStartRatioLimitSparse = 2000;
inline constexpr Vertex kStartRatioLimitDense = 500;
inline constexpr Vertex kAllPairsLimit = 2000;

struct ExperimentConfig {
  InstanceSpec instance;
  int replicates = 1;
  int starts_per_graph = 1;
  std::set<Statistic> statistics{Statistic::kLength, Statistic::kNormalizedLength,
                                 Statistic::kSd};
  std::string out_dir;
  int workers = 1;
  // Breakpoint cap for greedy cover profiles.
  std::size_t max_breakpoints = 256;

  // Throws InputError for R < 1, K < 1, workers < 1 or an invalid instance.
  void validate() const;
};

// Replicate count for a model and size: 200, 100 or 50 as instances grow.
int default_replicates(const InstanceSpec& spec);

struct WalkRecord {
  Vertex start = 0;
  double length = 0.0;
  double normalized = 0.0;
};

struct GraphRecord {
  int replicate = 0;
  std::uint64_t seed = 0;
  std::vector<WalkRecord> walks;
  std::optional<double> mst;
  std::optional<double> diameter;
  std::optional<double> start_ratio;
  std::optional<double> tsp_length;        // walk convention, from walks[0].start
  std::optional<double> tsp_tour_length;
  std::optional<double> cover_integral;    // 2 * integral of N_hat over [0, diameter/2]
  std::optional<double> cover_exponent;
};

struct VarianceDecomposition {
  double between = 0.0;  // var E(L | G)
  double within = 0.0;   // E var(L | G)
  double total = 0.0;    // sample variance of all lengths
  bool floored = false;  // between estimate was negative and set to 0
  double ratio() const { return within > 0.0 ? between / within : kInfinity; }
};

// Nested-design estimators: within = mean of per-graph sample variances;
// between = sample variance of per-graph means - within / K, floored at 0.
// Every group must have the same size K >= 2, and there must be >= 2 groups.
VarianceDecomposition variance_decomposition(std::span<const std::vector<double>> groups);

struct StatisticStatus {
  bool ok = true;
  std::string message;
};

struct ExperimentSummary {
  ExperimentConfig config;
  Vertex n = 0;
  std::vector<GraphRecord> records;

  std::size_t walk_count = 0;
  double mean = 0.0;
  double sd = 0.0;
  double standard_error = 0.0;
  std::string normalization;  // "n^-1/2" or "n^-1"
  double normalized_mean = 0.0;
  double normalized_sd = 0.0;
  double sd_over_mean = 0.0;

  std::optional<VarianceDecomposition> variance;
  std::optional<double> mean_mst;
  std::optional<double> mean_diameter;
  std::optional<double> mean_start_ratio;
  std::optional<double> max_start_ratio;
  std::optional<double> mean_tsp;
  std::optional<double> mean_nuv_tsp_ratio;
  std::optional<double> max_nuv_tsp_ratio;
  std::optional<double> mean_cover_exponent;

  std::map<Statistic, StatisticStatus> status;

  bool all_ok() const;
};

// Factor turning a length into the tables' normalized column: n^{-1/2} for
// unit-scaled square instances, n^{-1} otherwise.
double normalization_factor(const InstanceSpec& spec);

// Runs R replicates (seed derive_seed(base, r)), each with K starts drawn
// from the replicate's own stream. Output is identical for any worker count.
ExperimentSummary run_experiment(const ExperimentConfig& config);

// Recomputes the aggregate fields from `records` and `config`.
void aggregate(ExperimentSummary& summary);

struct StartSensitivity {
  double max_length = 0.0;
  double min_length = 0.0;
  double ratio = 1.0;
  Vertex argmax = 0;
  Vertex argmin = 0;
  std::vector<double> lengths;  // indexed by start
};

StartSensitivity start_sensitivity(const WeightedGraph& g);

// Length walk a spends on edges that walk b also traverses, counted with
// multiplicity along a, divided by the length of walk a. Throws InputError when either walk was
// run without keep_paths.
double overlap_fraction(const WeightedGraph& g, const WalkResult& a, const WalkResult& b);
double overlap_fraction(const WeightedGraph& g, Vertex start_a, Vertex start_b);

}  // namespace nuv

#endif  // NUV_EXPERIMENTS_H_
