#include "nuv/experiments.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>

#include "nuv/baselines.h"
#include "nuv/cover.h"
#include "nuv/error.h"
#include "nuv/rng.h"
#include "nuv/shortest_path.h"

namespace nuv {
namespace {

constexpr std::uint64_t kStartStream = 1;

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // sample variance, 0 for a single value
};

Moments moments(std::span<const double> xs) {
  Moments m;
  if (xs.empty()) return m;
  for (double x : xs) m.mean += x;
  m.mean /= static_cast<double>(xs.size());
  if (xs.size() < 2) return m;
  for (double x : xs) m.variance += (x - m.mean) * (x - m.mean);
  m.variance /= static_cast<double>(xs.size() - 1);
  return m;
}

std::vector<Vertex> draw_starts(Vertex n, int k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vertex> starts;
  starts.reserve(k);
  if (k <= n) {
    // Partial Fisher-Yates: without replacement.
    std::vector<Vertex> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < k; ++i) {
      const auto j = i + static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
      starts.push_back(pool[i]);
    }
  } else {
    for (int i = 0; i < k; ++i) starts.push_back(static_cast<Vertex>(rng.below(n)));
  }
  return starts;
}

std::map<Statistic, StatisticStatus> check_preconditions(const ExperimentConfig& cfg,
                                                         Vertex n, bool dense) {
  std::map<Statistic, StatisticStatus> status;
  for (Statistic s : cfg.statistics) {
    StatisticStatus st;
    switch (s) {
      case Statistic::kVarianceDecomposition:
        if (cfg.starts_per_graph < 2 || cfg.replicates < 2) {
          st = {false, "variance_decomposition needs starts >= 2 and replicates >= 2"};
        }
        break;
      case Statistic::kStartRatio: {
        const Vertex limit = dense ? kStartRatioLimitDense : kStartRatioLimitSparse;
        if (n > limit) {
          st = {false, "start_ratio runs n walks; limited to n <= " + std::to_string(limit)};
        }
        break;
      }
      case Statistic::kDiameter:
      case Statistic::kCoverProfile:
        if (n > kAllPairsLimit) {
          st = {false, std::string(to_string(s)) + " needs all-pairs distances; limited to n <= " +
                           std::to_string(kAllPairsLimit)};
        }
        break;
      case Statistic::kTsp:
        if (n > kExactTspThreshold) {
          st = {false, "exact TSP is limited to n <= " + std::to_string(kExactTspThreshold)};
        }
        break;
      default:
        break;
    }
    status[s] = st;
  }
  return status;
}

bool wanted(const std::map<Statistic, StatisticStatus>& status, Statistic s) {
  const auto it = status.find(s);
  return it != status.end() && it->second.ok;
}

GraphRecord run_replicate(const ExperimentConfig& cfg, int replicate,
                          const std::map<Statistic, StatisticStatus>& status) {
  InstanceSpec spec = cfg.instance;
  spec.seed = derive_seed(cfg.instance.seed, static_cast<std::uint64_t>(replicate));
  const auto instance = generate(spec);
  const auto& g = instance.graph;
  const Vertex n = g.num_vertices();
  const double factor = normalization_factor(spec);

  GraphRecord rec;
  rec.replicate = replicate;
  rec.seed = spec.seed;
  for (Vertex start : draw_starts(n, cfg.starts_per_graph, derive_seed(spec.seed, kStartStream))) {
    const double len = nuv_walk(g, start).total_length;
    rec.walks.push_back({start, len, len * factor});
  }

  if (wanted(status, Statistic::kMst)) rec.mst = mst_length(g);
  if (wanted(status, Statistic::kCoverProfile)) {
    const auto d = all_pairs_distances(g);
    const auto method = n <= kExactCoverThreshold ? CoverMethod::kExact : CoverMethod::kGreedy;
    const auto profile = cover_profile(d, method, cfg.max_breakpoints);
    rec.diameter = d.max();
    rec.cover_integral = 2.0 * profile.integral(d.max() / 2.0);
    if (auto alpha = fit_profile_exponent(profile, n)) rec.cover_exponent = *alpha;
    if (!wanted(status, Statistic::kDiameter)) rec.diameter.reset();
  } else if (wanted(status, Statistic::kDiameter)) {
    rec.diameter = diameter(g);
  }
  if (wanted(status, Statistic::kStartRatio)) rec.start_ratio = start_sensitivity(g).ratio;
  if (wanted(status, Statistic::kTsp)) {
    const auto d = all_pairs_distances(g);
    rec.tsp_length = exact_tsp_walk(d, rec.walks.front().start).length;
    rec.tsp_tour_length = exact_tsp_tour(d, rec.walks.front().start).length;
  }
  return rec;
}

template <typename Get>
std::optional<double> mean_of(const std::vector<GraphRecord>& records, Get get) {
  double total = 0.0;
  std::size_t count = 0;
  for (const auto& r : records) {
    if (const std::optional<double> v = get(r)) {
      total += *v;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return total / static_cast<double>(count);
}

}  // namespace

std::string_view to_string(Statistic s) {
  switch (s) {
    case Statistic::kLength:
      return "length";
    case Statistic::kNormalizedLength:
      return "normalized_length";
    case Statistic::kSd:
      return "sd";
    case Statistic::kVarianceDecomposition:
      return "variance_decomposition";
    case Statistic::kStartRatio:
      return "start_ratio";
    case Statistic::kDiameter:
      return "diameter";
    case Statistic::kMst:
      return "mst";
    case Statistic::kCoverProfile:
      return "cover_profile";
    case Statistic::kTsp:
      return "tsp";
  }
  return "unknown";
}

Statistic parse_statistic(std::string_view name) {
  for (Statistic s : {Statistic::kLength, Statistic::kNormalizedLength, Statistic::kSd,
                      Statistic::kVarianceDecomposition, Statistic::kStartRatio,
                      Statistic::kDiameter, Statistic::kMst, Statistic::kCoverProfile,
                      Statistic::kTsp}) {
    if (name == to_string(s)) return s;
  }
  throw InputError("unknown statistic '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
  instance.validate();
  if (replicates < 1) throw InputError("replicates must be at least 1");
  if (starts_per_graph < 1) throw InputError("starts must be at least 1");
  if (workers < 1) throw InputError("workers must be at least 1");
}

int default_replicates(const InstanceSpec& spec) {
  switch (spec.model) {
    case Model::kSquare:
      return spec.size <= 200 ? 200 : spec.size <= 400 ? 100 : 50;
    case Model::kGrid:
      return spec.size <= 20 ? 100 : 50;
    case Model::kMeanField:
      return spec.size <= 400 ? 100 : 50;
    case Model::kLinear:
      return 1;
  }
  return 1;
}

double normalization_factor(const InstanceSpec& spec) {
  const double n = spec.num_vertices();
  if (spec.model == Model::kSquare && spec.scaling == Scaling::kUnit) return 1.0 / std::sqrt(n);
  return 1.0 / n;
}

VarianceDecomposition variance_decomposition(std::span<const std::vector<double>> groups) {
  if (groups.size() < 2) throw InputError("variance decomposition needs at least 2 graphs");
  const std::size_t k = groups.front().size();
  if (k < 2) throw InputError("variance decomposition needs at least 2 starts per graph");
  std::vector<double> means;
  std::vector<double> all;
  double within = 0.0;
  for (const auto& g : groups) {
    if (g.size() != k) throw InputError("variance decomposition needs equal group sizes");
    const auto m = moments(g);
    means.push_back(m.mean);
    within += m.variance;
    all.insert(all.end(), g.begin(), g.end());
  }
  VarianceDecomposition out;
  out.within = within / static_cast<double>(groups.size());
  out.between = moments(means).variance - out.within / static_cast<double>(k);
  if (out.between < 0.0) {
    out.between = 0.0;
    out.floored = true;
  }
  out.total = moments(all).variance;
  return out;
}

bool ExperimentSummary::all_ok() const {
  return std::all_of(status.begin(), status.end(), [](const auto& kv) { return kv.second.ok; });
}

void aggregate(ExperimentSummary& s) {
  const auto& cfg = s.config;
  std::vector<double> lengths;
  std::vector<std::vector<double>> groups;
  for (const auto& r : s.records) {
    auto& grp = groups.emplace_back();
    for (const auto& w : r.walks) {
      lengths.push_back(w.length);
      grp.push_back(w.length);
    }
  }
  const auto m = moments(lengths);
  const double n = static_cast<double>(s.n);
  const bool unit_square = cfg.instance.model == Model::kSquare &&
                           cfg.instance.scaling == Scaling::kUnit;
  s.walk_count = lengths.size();
  s.mean = m.mean;
  s.sd = std::sqrt(m.variance);
  s.standard_error = lengths.empty() ? 0.0 : s.sd / std::sqrt(static_cast<double>(lengths.size()));
  s.normalization = unit_square ? "n^-1/2" : "n^-1";
  s.normalized_mean = s.mean * normalization_factor(cfg.instance);
  // Estimates sigma: s.d.(L*) in the unit square, n^{-1/2} s.d.(L) otherwise.
  s.normalized_sd = unit_square ? s.sd : s.sd / std::sqrt(n);
  s.sd_over_mean = s.mean != 0.0 ? s.sd / s.mean : 0.0;

  s.variance.reset();
  const auto vd = s.status.find(Statistic::kVarianceDecomposition);
  if (vd != s.status.end() && vd->second.ok) s.variance = variance_decomposition(groups);

  s.mean_mst = mean_of(s.records, [](const GraphRecord& r) { return r.mst; });
  s.mean_diameter = mean_of(s.records, [](const GraphRecord& r) { return r.diameter; });
  s.mean_start_ratio = mean_of(s.records, [](const GraphRecord& r) { return r.start_ratio; });
  s.mean_tsp = mean_of(s.records, [](const GraphRecord& r) { return r.tsp_length; });
  s.mean_cover_exponent = mean_of(s.records, [](const GraphRecord& r) { return r.cover_exponent; });
  s.mean_nuv_tsp_ratio = mean_of(s.records, [](const GraphRecord& r) -> std::optional<double> {
    if (!r.tsp_length || *r.tsp_length == 0.0) return std::nullopt;
    return r.walks.front().length / *r.tsp_length;
  });
  s.max_start_ratio.reset();
  s.max_nuv_tsp_ratio.reset();
  for (const auto& r : s.records) {
    if (r.start_ratio) s.max_start_ratio = std::max(s.max_start_ratio.value_or(0.0), *r.start_ratio);
    if (r.tsp_length && *r.tsp_length > 0.0) {
      s.max_nuv_tsp_ratio = std::max(s.max_nuv_tsp_ratio.value_or(0.0),
                                     r.walks.front().length / *r.tsp_length);
    }
  }
}

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentSummary summary;
  summary.config = config;
  summary.n = config.instance.num_vertices();
  summary.status = check_preconditions(config, summary.n,
                                       config.instance.model == Model::kMeanField);
  summary.records.resize(config.replicates);

  std::vector<std::exception_ptr> errors(config.replicates);
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int r = next++; r < config.replicates; r = next++) {
      try {
        summary.records[r] = run_replicate(config, r, summary.status);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  const int threads = std::min(config.workers, config.replicates);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  aggregate(summary);
  return summary;
}

StartSensitivity start_sensitivity(const WeightedGraph& g) {
  StartSensitivity out;
  const Vertex n = g.num_vertices();
  out.lengths.resize(n);
  for (Vertex v = 0; v < n; ++v) out.lengths[v] = nuv_walk(g, v).total_length;
  const auto [lo, hi] = std::minmax_element(out.lengths.begin(), out.lengths.end());
  out.argmin = static_cast<Vertex>(lo - out.lengths.begin());
  out.argmax = static_cast<Vertex>(hi - out.lengths.begin());
  out.min_length = *lo;
  out.max_length = *hi;
  out.ratio = out.min_length > 0.0 ? out.max_length / out.min_length : 1.0;
  return out;
}

namespace {

std::uint64_t edge_key(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

double overlap_fraction(const WeightedGraph& g, const WalkResult& a, const WalkResult& b) {
  const auto has_paths = [](const WalkResult& w) {
    return w.step_paths.size() == w.step_distances.size();
  };
  if (!has_paths(a) || !has_paths(b)) {
    throw InputError("overlap_fraction needs walks run with keep_paths");
  }
  if (a.total_length == 0.0) return 1.0;
  std::unordered_set<std::uint64_t> used_by_b;
  for (const auto& path : b.step_paths) {
    for (std::size_t i = 1; i < path.size(); ++i) used_by_b.insert(edge_key(path[i - 1], path[i]));
  }
  // Time walk a spends on edges that walk b also uses, with multiplicity.
  double shared = 0.0;
  for (const auto& path : a.step_paths) {
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (used_by_b.contains(edge_key(path[i - 1], path[i]))) {
        shared += g.length(path[i - 1], path[i]);
      }
    }
  }
  return std::min(1.0, shared / a.total_length);
}

double overlap_fraction(const WeightedGraph& g, Vertex start_a, Vertex start_b) {
  const WalkOptions opts{.keep_paths = true};
  return overlap_fraction(g, nuv_walk(g, start_a, opts), nuv_walk(g, start_b, opts));
}

}  // namespace nuv
