#include "nuv/config.h"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include "nuv/error.h"

namespace nuv {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename Int>
Int parse_int(std::string_view text, std::string_view key, int line) {
  Int value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("config line " + std::to_string(line) + ": '" + std::string(key) +
                     "' expects an integer, got '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
Int parse_positive(std::string_view text, std::string_view key, int line) {
  const Int value = parse_int<Int>(text, key, line);
  if (value < 1) {
    throw InputError("config line " + std::to_string(line) + ": '" + std::string(key) +
                     "' must be positive");
  }
  return value;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::optional<Model> model;
  std::optional<Vertex> n, m;
  std::optional<std::uint64_t> seed;
  std::optional<int> replicates;

  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) {
      throw InputError("config line " + std::to_string(line) + ": expected 'key = value'");
    }
    const auto key = trim(text.substr(0, eq));
    const auto value = trim(text.substr(eq + 1));
    try {
      if (key == "model") {
        model = parse_model(value);
      } else if (key == "n") {
        n = parse_positive<Vertex>(value, key, line);
      } else if (key == "m") {
        m = parse_positive<Vertex>(value, key, line);
      } else if (key == "seed") {
        seed = parse_int<std::uint64_t>(value, key, line);
      } else if (key == "replicates") {
        replicates = parse_positive<int>(value, key, line);
      } else if (key == "starts") {
        cfg.starts_per_graph = parse_positive<int>(value, key, line);
      } else if (key == "workers") {
        cfg.workers = parse_positive<int>(value, key, line);
      } else if (key == "max_breakpoints") {
        cfg.max_breakpoints = parse_int<std::size_t>(value, key, line);
      } else if (key == "statistics") {
        cfg.statistics.clear();
        std::stringstream list{std::string(value)};
        std::string item;
        while (std::getline(list, item, ',')) {
          if (const auto name = trim(item); !name.empty()) {
            cfg.statistics.insert(parse_statistic(name));
          }
        }
      } else if (key == "out_dir") {
        cfg.out_dir = std::string(value);
      } else if (key == "scaling") {
        cfg.instance.scaling = parse_scaling(value);
      } else if (key == "distribution") {
        cfg.instance.grid_law = parse_length_law(value);
      } else {
        throw InputError("unknown key '" + std::string(key) + "'");
      }
    } catch (const InputError& e) {
      const std::string what = e.what();
      if (what.rfind("config line", 0) == 0) throw;
      throw InputError("config line " + std::to_string(line) + ": " + what);
    }
  }

  if (!model) throw InputError("config: missing required key 'model'");
  if (!seed) throw InputError("config: missing required key 'seed'");
  cfg.instance.model = *model;
  cfg.instance.seed = *seed;
  if (*model == Model::kGrid) {
    if (!m) throw InputError("config: grid model needs 'm'");
    cfg.instance.size = *m;
  } else {
    if (!n) throw InputError("config: model '" + std::string(to_string(*model)) + "' needs 'n'");
    cfg.instance.size = *n;
  }
  cfg.replicates = replicates.value_or(default_replicates(cfg.instance));
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace nuv
