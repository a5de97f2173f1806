#ifndef NUV_CONFIG_H_
#define NUV_CONFIG_H_

#include <istream>
#include <string>

#include "nuv/experiments.h"

namespace nuv {

// Flat key-value experiment file, one `key = value` per line, `#` comments.
//
//   model      square | grid | mean_field | linear        (required)
//   n          vertex count (square, mean_field, linear)
//   m          grid side (grid)
//   seed       64-bit base seed                           (required)
//   replicates R, default depends on model and size
//   starts     K starts per graph, default 1
//   statistics comma-separated: length, normalized_length, sd,
//              variance_decomposition, start_ratio, diameter, mst,
//              cover_profile, tsp (default length, normalized_length, sd)
//   out_dir    output directory
//   scaling    unit | nearest-neighbor (square only, default unit)
//   distribution exponential | uniform (grid only, default exponential)
//   workers    worker threads, default 1
//   max_breakpoints  greedy cover-profile breakpoint cap, default 256
//
// Throws InputError with the offending line number on any problem.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

}  // namespace nuv

#endif  // NUV_CONFIG_H_
