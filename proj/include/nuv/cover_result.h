#ifndef NUV_COVER_RESULT_H_
#define NUV_COVER_RESULT_H_

#include <string_view>
#include <vector>

#include "nuv/graph.h"

namespace nuv {

enum class CoverMethod { kExact, kGreedy, kWalkDerived };

std::string_view to_string(CoverMethod m);

// A set of centers whose radius-r balls contain every vertex, so `size` is
// an upper bound on the covering number N(r) (equal to it for kExact).
struct CoverResult {
  double radius = 0.0;
  std::vector<Vertex> centers;  // ascending for kExact/kGreedy, walk order for kWalkDerived
  int size = 0;
  CoverMethod method = CoverMethod::kExact;
};

}  // namespace nuv

#endif  // NUV_COVER_RESULT_H_
