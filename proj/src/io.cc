#include "nuv/io.h"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <system_error>

#include "nuv/error.h"

namespace nuv {
namespace {

using nlohmann::json;

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank, non-comment line split into tokens; false at EOF.
  bool next(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, buf_)) {
      ++line_;
      std::string_view text = buf_;
      if (const auto hash = text.find('#'); hash != std::string_view::npos) {
        text = text.substr(0, hash);
      }
      tokens.clear();
      std::size_t pos = 0;
      while (pos < text.size()) {
        const auto start = text.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) break;
        const auto end = std::min(text.find_first_of(" \t\r", start), text.size());
        tokens.push_back(text.substr(start, end - start));
        pos = end;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("graph file line " + std::to_string(line_) + ": " + what);
  }

  template <typename T>
  T parse(std::string_view tok) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      fail("cannot parse '" + std::string(tok) + "' as a number");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string buf_;
  int line_ = 0;
};

json optional_json(const std::optional<double>& x) {
  return x ? json(*x) : json(nullptr);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

WeightedGraph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string_view> tok;
  if (!reader.next(tok)) throw InputError("graph file is empty");
  if (tok.size() != 2) reader.fail("header must be 'n m'");
  const auto n = reader.parse<Vertex>(tok[0]);
  const auto m = reader.parse<std::int64_t>(tok[1]);
  if (n < 1) reader.fail("vertex count must be positive");
  if (m < 0) reader.fail("edge count must be nonnegative");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::int64_t k = 0; k < m; ++k) {
    if (!reader.next(tok)) {
      throw InputError("graph file ends after " + std::to_string(k) + " of " +
                       std::to_string(m) + " edges");
    }
    if (tok.size() != 3) reader.fail("edge line must be 'u v length'");
    edges.push_back({reader.parse<Vertex>(tok[0]), reader.parse<Vertex>(tok[1]),
                     reader.parse<double>(tok[2])});
  }
  if (reader.next(tok)) reader.fail("unexpected content after the last edge");

  const auto sz = static_cast<std::int64_t>(n);
  if (n >= 2 && m == sz * (sz - 1) / 2) {
    // Validate as an edge list first (parallel edges, self-loops), then
    // switch to dense storage.
    const auto sparse = WeightedGraph::from_edges(n, edges);
    std::vector<double> matrix(static_cast<std::size_t>(sz * sz), 0.0);
    for (const auto& e : sparse.edges()) {
      matrix[static_cast<std::size_t>(e.u) * n + e.v] = e.length;
      matrix[static_cast<std::size_t>(e.v) * n + e.u] = e.length;
    }
    return WeightedGraph::complete(n, std::move(matrix));
  }
  return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    g.for_each_neighbor(u, [&](Vertex v, double len) {
      if (u < v) out << u << ' ' << v << ' ' << format_double(len) << '\n';
    });
  }
}

void write_points_csv(std::ostream& out, std::span<const Point> points) {
  out << "x,y\n";
  for (const auto& p : points) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

nlohmann::json to_json(const WalkResult& walk) {
  json j{{"start", walk.start},
         {"order", walk.order},
         {"step_distances", walk.step_distances},
         {"total_length", walk.total_length}};
  if (!walk.step_paths.empty()) j["step_paths"] = walk.step_paths;
  if (walk.closing_distance) {
    j["closing_distance"] = *walk.closing_distance;
    j["tour_length"] = walk.tour_length();
  }
  return j;
}

nlohmann::json to_json(const CoverResult& cover) {
  return {{"radius", cover.radius},
          {"centers", cover.centers},
          {"size", cover.size},
          {"method", to_string(cover.method)}};
}

nlohmann::json to_json(const CoverProfile& profile) {
  return {{"method", to_string(profile.method)},
          {"r", profile.radii},
          {"N_hat", profile.sizes}};
}

nlohmann::json to_json(const Proposition1Report& report) {
  json radii = json::array();
  for (const auto& c : report.radii) {
    radii.push_back({{"r", c.radius},
                     {"bound", c.bound},
                     {"exact_N", c.exact_size ? json(*c.exact_size) : json(nullptr)},
                     {"walk_cover_size", c.walk_cover_size},
                     {"walk_cover_valid", c.walk_cover_valid},
                     {"pass", c.pass}});
  }
  return {{"start", report.start},
          {"L_nuv", report.walk_length},
          {"diameter", report.diameter},
          {"inequality_i", radii},
          {"inequality_ii",
           {{"profile_method", to_string(report.profile_method)},
            {"cover_integral", report.cover_integral},
            {"pass", report.integral_pass}}},
          {"pass", report.pass()}};
}

nlohmann::json to_json(const BaselineResult& b) {
  json j{{"mst_length", b.mst_length},
         {"tsp_length", optional_json(b.tsp_length)},
         {"tsp_tour_length", optional_json(b.tsp_tour_length)}};
  j["tsp_order"] = b.tsp_order ? json(*b.tsp_order) : json(nullptr);
  return j;
}

nlohmann::json to_json(const ExperimentSummary& s) {
  const auto& cfg = s.config;
  json stats = json::array();
  for (auto st : cfg.statistics) stats.push_back(to_string(st));
  json status = json::object();
  for (const auto& [st, v] : s.status) {
    status[std::string(to_string(st))] = {{"ok", v.ok}, {"message", v.message}};
  }
  json records = json::array();
  for (const auto& r : s.records) {
    json walks = json::array();
    for (const auto& w : r.walks) {
      walks.push_back({{"start", w.start}, {"L", w.length}, {"normalized_L", w.normalized}});
    }
    json rec{{"replicate", r.replicate}, {"seed", r.seed}, {"walks", walks}};
    if (r.mst) rec["mst_length"] = *r.mst;
    if (r.diameter) rec["diameter"] = *r.diameter;
    if (r.start_ratio) rec["start_ratio"] = *r.start_ratio;
    if (r.tsp_length) rec["tsp_length"] = *r.tsp_length;
    if (r.tsp_tour_length) rec["tsp_tour_length"] = *r.tsp_tour_length;
    if (r.cover_integral) rec["cover_integral"] = *r.cover_integral;
    if (r.cover_exponent) rec["cover_exponent"] = *r.cover_exponent;
    records.push_back(std::move(rec));
  }
  json j{
      {"config",
       {{"model", to_string(cfg.instance.model)},
        {"size", cfg.instance.size},
        {"n", s.n},
        {"seed", cfg.instance.seed},
        {"scaling", to_string(cfg.instance.scaling)},
        {"distribution", to_string(cfg.instance.grid_law)},
        {"replicates", cfg.replicates},
        {"starts", cfg.starts_per_graph},
        {"statistics", stats}}},
      {"walks", s.walk_count},
      {"mean", s.mean},
      {"sd", s.sd},
      {"standard_error", s.standard_error},
      {"normalization", s.normalization},
      {"normalized_mean", s.normalized_mean},
      {"normalized_sd", s.normalized_sd},
      {"sd_over_mean", s.sd_over_mean},
      {"status", status},
  };
  if (s.variance) {
    j["variance_decomposition"] = {{"between", s.variance->between},
                                   {"within", s.variance->within},
                                   {"total", s.variance->total},
                                   {"ratio", s.variance->ratio()},
                                   {"between_floored", s.variance->floored}};
  }
  const double n = static_cast<double>(s.n);
  if (s.mean_mst) {
    j["mst"] = {{"mean", *s.mean_mst}, {"mean_over_n", *s.mean_mst / n}};
  }
  if (s.mean_diameter) {
    j["diameter"] = {{"mean", *s.mean_diameter}, {"mean_over_log_n", *s.mean_diameter / std::log(n)}};
  }
  if (s.mean_start_ratio) {
    j["start_ratio"] = {{"mean", *s.mean_start_ratio}, {"max", optional_json(s.max_start_ratio)}};
  }
  if (s.mean_tsp) {
    j["tsp"] = {{"mean", *s.mean_tsp},
                {"mean_nuv_ratio", optional_json(s.mean_nuv_tsp_ratio)},
                {"max_nuv_ratio", optional_json(s.max_nuv_tsp_ratio)}};
  }
  if (s.mean_cover_exponent) j["cover_exponent_mean"] = *s.mean_cover_exponent;
  j["records"] = std::move(records);
  return j;
}

void write_walk_csv(std::ostream& out, const WalkResult& walk) {
  out << "step,from,to,distance,cumulative\n";
  double cumulative = 0.0;
  for (std::size_t i = 0; i < walk.step_distances.size(); ++i) {
    cumulative += walk.step_distances[i];
    out << i + 1 << ',' << walk.order[i] << ',' << walk.order[i + 1] << ','
        << format_double(walk.step_distances[i]) << ',' << format_double(cumulative) << '\n';
  }
}

void write_profile_csv(std::ostream& out, const CoverProfile& profile) {
  out << "r,N_hat\n";
  for (std::size_t j = 0; j < profile.radii.size(); ++j) {
    out << format_double(profile.radii[j]) << ',' << profile.sizes[j] << '\n';
  }
}

void write_records_csv(std::ostream& out, const ExperimentSummary& s) {
  out << "replicate,seed,start,L,normalized_L\n";
  for (const auto& r : s.records) {
    for (const auto& w : r.walks) {
      out << r.replicate << ',' << r.seed << ',' << w.start << ',' << format_double(w.length)
          << ',' << format_double(w.normalized) << '\n';
    }
  }
}

}  // namespace nuv
