// nuv: command-line front end for nearest-unvisited-vertex walks.
//
// Exit codes: 0 success, 2 usage or input error, 1 computational failure
// (size threshold exceeded, a failed check, or a failed experiment statistic).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nuv/baselines.h"
#include "nuv/config.h"
#include "nuv/cover.h"
#include "nuv/error.h"
#include "nuv/experiments.h"
#include "nuv/figures.h"
#include "nuv/io.h"
#include "nuv/models.h"
#include "nuv/shortest_path.h"
#include "nuv/walk.h"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace nuv;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kGraphFormat = R"(
Graph file format (--graph-file, `gen` output):
  n m               header: vertex count and edge count
  u v length        m lines, 0-based endpoints, positive finite length
  Blank lines and text after '#' are ignored. The graph must be connected.
)";

constexpr const char* kConfigFormat = R"(
Config file format (--config): one `key = value` per line, '#' comments.
  model         square | grid | mean_field | linear   (required)
  n / m         vertex count, or grid side for the grid model
  seed          64-bit base seed                      (required)
  replicates    graphs to generate (default depends on model and size)
  starts        walks per graph (default 1)
  statistics    comma list of: length, normalized_length, sd,
                variance_decomposition, start_ratio, diameter, mst,
                cover_profile, tsp
  out_dir       directory for records.csv and summary.json
  scaling       unit | nearest-neighbor (square)
  distribution  exponential | uniform (grid edge lengths)
  workers       worker threads (default 1)
  max_breakpoints  radius cap for greedy cover profiles (default 256)

Outputs: records.csv (replicate,seed,start,L,normalized_L) and summary.json.
)";

struct InstanceArgs {
  std::string model;
  Vertex n = 0;
  Vertex m = 0;
  std::optional<std::uint64_t> seed;
  std::string scaling = "unit";
  std::string distribution = "exponential";
  std::string graph_file;
};

struct LoadedInstance {
  WeightedGraph graph;
  std::vector<Point> points;
};

void add_instance_options(CLI::App* cmd, InstanceArgs& a) {
  cmd->add_option("--model", a.model, "square | grid | mean_field | linear");
  cmd->add_option("--n", a.n, "Vertex count (square, mean_field, linear)");
  cmd->add_option("--m", a.m, "Grid side; the grid has m*m vertices");
  cmd->add_option("--seed", a.seed, "Seed; required for random models");
  cmd->add_option("--scaling", a.scaling, "unit | nearest-neighbor (square)")
      ->capture_default_str();
  cmd->add_option("--distribution", a.distribution, "exponential | uniform (grid lengths)")
      ->capture_default_str();
  cmd->add_option("--graph-file", a.graph_file, "Read the graph from a file instead");
  cmd->footer(kGraphFormat);
}

InstanceSpec to_spec(const InstanceArgs& a) {
  InstanceSpec spec;
  spec.model = parse_model(a.model);
  spec.scaling = parse_scaling(a.scaling);
  spec.grid_law = parse_length_law(a.distribution);
  if (spec.model == Model::kGrid) {
    if (a.m == 0) throw InputError("--m is required for the grid model");
    spec.size = a.m;
  } else {
    if (a.n == 0) throw InputError("--n is required for model " + a.model);
    spec.size = a.n;
  }
  if (spec.model != Model::kLinear) {
    if (!a.seed) throw InputError("--seed is required for model " + a.model);
    spec.seed = *a.seed;
  }
  spec.validate();
  return spec;
}

// Validates flags without building anything.
void check_instance_args(const InstanceArgs& a) {
  if (!a.graph_file.empty()) {
    if (!a.model.empty()) throw InputError("--graph-file and --model are exclusive");
    return;
  }
  if (a.model.empty()) throw InputError("one of --model or --graph-file is required");
  to_spec(a);
}

LoadedInstance load_instance(const InstanceArgs& a) {
  if (!a.graph_file.empty()) return {load_graph(a.graph_file), {}};
  auto inst = generate(to_spec(a));
  return {std::move(inst.graph), std::move(inst.points)};
}

void check_start(const WeightedGraph& g, Vertex start) { g.check_vertex(start); }

std::vector<double> parse_list(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError(std::string(flag) + ": not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw InputError(std::string(flag) + ": empty list");
  return out;
}

fs::path prepare_out_dir(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw InputError("cannot create --out-dir '" + dir + "': " + ec.message());
  return p;
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw InputError("cannot write " + p.string());
  return out;
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- subcommands --------------------------------------------------------

struct WalkArgs {
  InstanceArgs inst;
  Vertex start = 0;
  bool tour = false;
  bool keep_paths = false;
  std::optional<double> radius;
  std::string out_dir;
};

int run_walk(const WalkArgs& a) {
  const auto inst = load_instance(a.inst);
  check_start(inst.graph, a.start);
  const auto walk = nuv_walk(inst.graph, a.start, {.keep_paths = a.keep_paths, .tour = a.tour});
  json j = to_json(walk);
  if (a.radius) j["walk_cover"] = to_json(walk_cover_selection(walk, *a.radius));
  if (!a.out_dir.empty()) {
    auto out = open_out(prepare_out_dir(a.out_dir) / "walk.csv");
    write_walk_csv(out, walk);
  }
  print(j);
  return 0;
}

struct CoverArgs {
  InstanceArgs inst;
  std::string method = "auto";
  std::optional<double> radius;
  std::size_t max_breakpoints = 0;
  std::string out_dir;
};

int run_cover(const CoverArgs& a) {
  const auto inst = load_instance(a.inst);
  const auto d = all_pairs_distances(inst.graph);
  const Vertex n = inst.graph.num_vertices();
  CoverMethod method;
  if (a.method == "auto") {
    method = n <= kExactCoverThreshold ? CoverMethod::kExact : CoverMethod::kGreedy;
  } else if (a.method == "exact") {
    method = CoverMethod::kExact;
  } else {
    method = CoverMethod::kGreedy;
  }
  if (a.radius) {
    const auto c = method == CoverMethod::kExact ? exact_cover_number(d, *a.radius)
                                                 : greedy_cover(d, *a.radius);
    print(to_json(c));
    return 0;
  }
  const auto profile = cover_profile(d, method, a.max_breakpoints);
  json j = to_json(profile);
  const auto alpha = fit_profile_exponent(profile, n);
  j["fitted_exponent"] = alpha ? json(*alpha) : json(nullptr);
  if (!a.out_dir.empty()) {
    auto out = open_out(prepare_out_dir(a.out_dir) / "cover_profile.csv");
    write_profile_csv(out, profile);
  }
  print(j);
  return 0;
}

struct VerifyArgs {
  InstanceArgs inst;
  Vertex start = 0;
  std::string radii;
  std::size_t max_breakpoints = 512;
};

int run_verify(const VerifyArgs& a) {
  const auto inst = load_instance(a.inst);
  check_start(inst.graph, a.start);
  const auto d = all_pairs_distances(inst.graph);
  const auto walk = nuv_walk(inst.graph, a.start);
  const auto radii = a.radii.empty() ? default_radii(d) : parse_list(a.radii, "--radii");
  for (double r : radii) {
    if (!(r > 0.0)) throw InputError("--radii: radii must be positive");
  }
  const auto report = verify_proposition1(inst.graph, d, walk, radii,
                                          {.max_breakpoints = a.max_breakpoints});
  const auto balls = check_ball_steps(d, walk, radii);
  json j = to_json(report);
  j["ball_steps"] = {{"balls", balls.balls},
                     {"violations", balls.violations},
                     {"pass", balls.violations == 0}};
  const bool pass = report.pass() && balls.violations == 0;
  j["pass"] = pass;
  print(j);
  if (!pass) {
    std::cerr << "nuv: verification failed\n";
    return kExitFailure;
  }
  return 0;
}

struct BaselineArgs {
  InstanceArgs inst;
  Vertex start = 0;
};

int run_baseline(const BaselineArgs& a) {
  const auto inst = load_instance(a.inst);
  check_start(inst.graph, a.start);
  const auto b = compute_baselines(inst.graph, a.start);
  const auto walk = nuv_walk(inst.graph, a.start);
  json j = to_json(b);
  j["start"] = a.start;
  j["L_nuv"] = walk.total_length;
  j["nuv_tsp_ratio"] = b.tsp_length ? json(walk.total_length / *b.tsp_length) : json(nullptr);
  if (!b.tsp_length) {
    j["tsp_skipped"] = "exact TSP limited to n <= " + std::to_string(kExactTspThreshold);
  }
  print(j);
  return 0;
}

struct ExperimentArgs {
  std::string config;
  std::optional<int> workers;
  std::string out_dir;
};

int run_experiment_cmd(const ExperimentArgs& a) {
  auto cfg = load_config(a.config);
  if (a.workers) cfg.workers = *a.workers;
  if (!a.out_dir.empty()) cfg.out_dir = a.out_dir;
  cfg.validate();
  const auto summary = run_experiment(cfg);
  const json j = to_json(summary);
  if (!cfg.out_dir.empty()) {
    const auto dir = prepare_out_dir(cfg.out_dir);
    auto records = open_out(dir / "records.csv");
    write_records_csv(records, summary);
    auto out = open_out(dir / "summary.json");
    out << j.dump(2) << '\n';
  }
  // The records are in the files; keep stdout to the aggregates.
  json brief = j;
  brief.erase("records");
  print(brief);
  for (const auto& [stat, st] : summary.status) {
    if (!st.ok) std::cerr << "nuv: statistic " << to_string(stat) << " failed: " << st.message << '\n';
  }
  return summary.all_ok() ? 0 : kExitFailure;
}

struct FigureArgs {
  InstanceArgs inst;
  std::string kind;
  Vertex start = 0;
  std::string starts;
  double bin_width = 0.0;
  bool svg = false;
  bool keep_paths = false;
  std::size_t max_breakpoints = 0;
  std::string out_dir;
};

int run_figure(const FigureArgs& a) {
  const auto kind = parse_figure_kind(a.kind);
  const auto inst = load_instance(a.inst);
  const auto& g = inst.graph;
  const auto dir = prepare_out_dir(a.out_dir);
  json written = json::array();
  const auto emit = [&](const std::string& name) -> std::ofstream {
    written.push_back((dir / name).string());
    return open_out(dir / name);
  };
  const WalkOptions opts{.keep_paths = a.keep_paths};
  switch (kind) {
    case FigureKind::kWalkPolyline: {
      check_start(g, a.start);
      const auto walk = nuv_walk(g, a.start, opts);
      if (inst.points.empty()) throw InputError("walk_polyline needs point coordinates (square model)");
      auto out = emit("walk_polyline.csv");
      write_polyline_csv(out, inst.points, walk);
      if (a.svg) emit("walk.svg") << render_svg(inst.points, std::span(&walk, 1));
      break;
    }
    case FigureKind::kMultiStartOverlay: {
      if (inst.points.empty()) {
        throw InputError("multi_start_overlay needs point coordinates (square model)");
      }
      std::vector<WalkResult> walks;
      for (double s : parse_list(a.starts.empty() ? "0" : a.starts, "--starts")) {
        const auto v = static_cast<Vertex>(s);
        if (static_cast<double>(v) != s) throw InputError("--starts: vertex indices are integers");
        check_start(g, v);
        walks.push_back(nuv_walk(g, v, opts));
      }
      auto out = emit("multi_start_overlay.csv");
      write_overlay_csv(out, inst.points, walks);
      if (a.svg) emit("overlay.svg") << render_svg(inst.points, walks);
      json overlaps = json::array();
      const WalkOptions paths{.keep_paths = true};
      for (std::size_t i = 0; i < walks.size(); ++i) {
        for (std::size_t k = 0; k < walks.size(); ++k) {
          if (i == k) continue;
          overlaps.push_back({{"a", walks[i].start},
                              {"b", walks[k].start},
                              {"fraction", overlap_fraction(g, nuv_walk(g, walks[i].start, paths),
                                                            nuv_walk(g, walks[k].start, paths))}});
        }
      }
      print({{"files", written}, {"overlap", overlaps}});
      return 0;
    }
    case FigureKind::kStepHistogram: {
      check_start(g, a.start);
      if (!(a.bin_width > 0.0)) throw InputError("step_histogram needs --bin-width > 0");
      const auto walk = nuv_walk(g, a.start);
      auto out = emit("step_histogram.csv");
      write_histogram_csv(out, step_histogram(walk, a.bin_width));
      break;
    }
    case FigureKind::kCoverProfile: {
      const auto d = all_pairs_distances(g);
      const auto method =
          g.num_vertices() <= kExactCoverThreshold ? CoverMethod::kExact : CoverMethod::kGreedy;
      auto out = emit("cover_profile.csv");
      write_profile_csv(out, cover_profile(d, method, a.max_breakpoints));
      break;
    }
  }
  print({{"files", written}});
  return 0;
}

struct GenArgs {
  InstanceArgs inst;
  std::string out_dir;
};

int run_gen(const GenArgs& a) {
  if (!a.inst.graph_file.empty()) throw InputError("gen needs --model, not --graph-file");
  const auto inst = load_instance(a.inst);
  if (a.out_dir.empty()) {
    write_graph(std::cout, inst.graph);
    return 0;
  }
  const auto dir = prepare_out_dir(a.out_dir);
  json written = json::array();
  {
    auto out = open_out(dir / "graph.txt");
    write_graph(out, inst.graph);
    written.push_back((dir / "graph.txt").string());
  }
  if (!inst.points.empty()) {
    auto out = open_out(dir / "points.csv");
    write_points_csv(out, inst.points);
    written.push_back((dir / "points.csv").string());
  }
  print({{"files", written}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nearest-unvisited-vertex walks on random graph models"};
  app.require_subcommand(1);
  app.footer("Exit codes: 0 success, 2 usage or input error, 1 computational failure.");

  WalkArgs walk;
  auto* walk_cmd = app.add_subcommand("walk", "Run one NUV walk and print it as JSON");
  add_instance_options(walk_cmd, walk.inst);
  walk_cmd->add_option("--start", walk.start, "Start vertex")->capture_default_str();
  walk_cmd->add_flag("--tour", walk.tour, "Also return to the start");
  walk_cmd->add_flag("--keep-paths", walk.keep_paths, "Include the vertex path of each step");
  walk_cmd->add_option("--radius", walk.radius, "Also print the walk-derived cover at this radius")
      ->check(CLI::PositiveNumber);
  walk_cmd->add_option("--out-dir", walk.out_dir,
                       "Write walk.csv (step,from,to,distance,cumulative) here");

  CoverArgs cover;
  auto* cover_cmd = app.add_subcommand("cover", "Print the covering-number profile N(r)");
  add_instance_options(cover_cmd, cover.inst);
  cover_cmd->add_option("--method", cover.method, "auto | exact | greedy")
      ->check(CLI::IsMember({"auto", "exact", "greedy"}))
      ->capture_default_str();
  cover_cmd->add_option("--radius", cover.radius, "Print one cover at this radius instead")
      ->check(CLI::PositiveNumber);
  cover_cmd->add_option("--max-breakpoints", cover.max_breakpoints,
                        "Greedy profile radius cap, 0 for every breakpoint")
      ->capture_default_str();
  cover_cmd->add_option("--out-dir", cover.out_dir, "Write cover_profile.csv (r,N_hat) here");

  VerifyArgs verify;
  auto* verify_cmd =
      app.add_subcommand("verify-prop1", "Check the covering-number bounds against one walk");
  add_instance_options(verify_cmd, verify.inst);
  verify_cmd->add_option("--start", verify.start, "Start vertex")->capture_default_str();
  verify_cmd->add_option("--radii", verify.radii,
                         "Comma-separated radii (default: 12 geometric radii up to the diameter)");
  verify_cmd->add_option("--max-breakpoints", verify.max_breakpoints,
                         "Greedy profile radius cap for large graphs")
      ->capture_default_str();

  BaselineArgs baseline;
  auto* baseline_cmd = app.add_subcommand("baseline", "Print MST and exact TSP lengths");
  add_instance_options(baseline_cmd, baseline.inst);
  baseline_cmd->add_option("--start", baseline.start, "Start vertex of the TSP walk")
      ->capture_default_str();

  ExperimentArgs experiment;
  auto* experiment_cmd = app.add_subcommand("experiment", "Run a replicated experiment");
  experiment_cmd->add_option("--config", experiment.config, "Config file")->required();
  experiment_cmd->add_option("--workers", experiment.workers, "Worker threads (overrides config)")
      ->check(CLI::PositiveNumber);
  experiment_cmd->add_option("--out-dir", experiment.out_dir, "Output directory (overrides config)");
  experiment_cmd->footer(kConfigFormat);

  FigureArgs figure;
  auto* figure_cmd = app.add_subcommand("figure", "Write figure data files");
  add_instance_options(figure_cmd, figure.inst);
  figure_cmd
      ->add_option("--kind", figure.kind,
                   "walk_polyline | step_histogram | multi_start_overlay | cover_profile")
      ->required();
  figure_cmd->add_option("--start", figure.start, "Start vertex")->capture_default_str();
  figure_cmd->add_option("--starts", figure.starts, "Comma-separated starts for the overlay");
  figure_cmd->add_option("--bin-width", figure.bin_width, "Histogram bin width");
  figure_cmd->add_flag("--svg", figure.svg, "Also render an SVG (polyline kinds)");
  figure_cmd->add_flag("--keep-paths", figure.keep_paths, "Draw edge-level step paths");
  figure_cmd->add_option("--max-breakpoints", figure.max_breakpoints,
                         "Greedy profile radius cap, 0 for every breakpoint");
  figure_cmd->add_option("--out-dir", figure.out_dir, "Output directory")->required();
  figure_cmd->footer(std::string(kGraphFormat) + R"(
Files: walk_polyline.csv (step,x0,y0,x1,y1), multi_start_overlay.csv
(start,step,x0,y0,x1,y1), step_histogram.csv (bin_lo,bin_hi,count),
cover_profile.csv (r,N_hat), walk.svg / overlay.svg.
)");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Write an instance in the graph file format");
  add_instance_options(gen_cmd, gen.inst);
  gen_cmd->add_option("--out-dir", gen.out_dir,
                      "Write graph.txt (and points.csv for square) here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*walk_cmd) {
      check_instance_args(walk.inst);
      return run_walk(walk);
    }
    if (*cover_cmd) {
      check_instance_args(cover.inst);
      return run_cover(cover);
    }
    if (*verify_cmd) {
      check_instance_args(verify.inst);
      return run_verify(verify);
    }
    if (*baseline_cmd) {
      check_instance_args(baseline.inst);
      return run_baseline(baseline);
    }
    if (*experiment_cmd) return run_experiment_cmd(experiment);
    if (*figure_cmd) {
      check_instance_args(figure.inst);
      parse_figure_kind(figure.kind);
      return run_figure(figure);
    }
    if (*gen_cmd) {
      check_instance_args(gen.inst);
      return run_gen(gen);
    }
  } catch (const InputError& e) {
    std::cerr << "nuv: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ThresholdError& e) {
    std::cerr << "nuv: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "nuv: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
