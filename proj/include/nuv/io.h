#ifndef NUV_IO_H_
#define NUV_IO_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>

#include "json.hpp"
#include "nuv/baselines.h"
#include "nuv/cover.h"
#include "nuv/experiments.h"
#include "nuv/graph.h"
#include "nuv/walk.h"

namespace nuv {

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

// Graph interchange format: a header line `n m`, then m lines `u v length`
// with 0-based vertex indices. Blank lines and `#` comments are skipped. A
// complete graph is loaded into dense storage.
WeightedGraph read_graph(std::istream& in);
WeightedGraph load_graph(const std::string& path);
void write_graph(std::ostream& out, const WeightedGraph& g);

// `x,y` header then one row per point in index order.
void write_points_csv(std::ostream& out, std::span<const Point> points);

nlohmann::json to_json(const WalkResult& walk);
nlohmann::json to_json(const CoverResult& cover);
nlohmann::json to_json(const CoverProfile& profile);
nlohmann::json to_json(const Proposition1Report& report);
nlohmann::json to_json(const BaselineResult& baselines);
nlohmann::json to_json(const ExperimentSummary& summary);

// step,from,to,distance,cumulative
void write_walk_csv(std::ostream& out, const WalkResult& walk);
// r,N_hat
void write_profile_csv(std::ostream& out, const CoverProfile& profile);
// replicate,seed,start,L,normalized_L
void write_records_csv(std::ostream& out, const ExperimentSummary& summary);

}  // namespace nuv

#endif  // NUV_IO_H_
