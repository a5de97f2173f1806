#ifndef NUV_MODELS_H_
#define NUV_MODELS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "nuv/graph.h"

namespace nuv {

enum class Model { kSquare, kGrid, kMeanField, kLinear };

// Square model only: kUnit keeps points in [0,1]^2 (lengths L*); kNearestNeighbor
// stretches to a square of area n so nearest-neighbor distances are order 1
// (L = n^{1/2} L*).
enum class Scaling { kUnit, kNearestNeighbor };

// Grid edge-length law. kExponential has mean 1; kUniform is uniform on (0, 1).
enum class LengthLaw { kExponential, kUniform };

std::string_view to_string(Model m);
std::string_view to_string(Scaling s);
std::string_view to_string(LengthLaw l);
// Throw InputError on unknown names. Accepts "mean_field" and "mean-field".
Model parse_model(std::string_view name);
Scaling parse_scaling(std::string_view name);
LengthLaw parse_length_law(std::string_view name);

struct InstanceSpec {
  Model model = Model::kSquare;
  // n for square, mean-field and linear; the side m for grid.
  Vertex size = 2;
  std::uint64_t seed = 0;
  Scaling scaling = Scaling::kUnit;
  LengthLaw grid_law = LengthLaw::kExponential;

  Vertex num_vertices() const { return model == Model::kGrid ? size * size : size; }
  // Throws InputError when size < 2 or the vertex count overflows.
  void validate() const;
};

struct Instance {
  WeightedGraph graph;
  // Coordinates, for geometric (square) instances only.
  std::vector<Point> points;
};
using GeometricInstance = Instance;

// n i.i.d. uniform points, x then y per point in index order.
GeometricInstance gen_square(Vertex n, std::uint64_t seed, Scaling scaling = Scaling::kUnit);

// m x m lattice; vertex (row, col) is row * m + col. Lengths drawn for edges
// in lexicographic (u, v) order.
WeightedGraph gen_grid(Vertex m, std::uint64_t seed,
                       LengthLaw law = LengthLaw::kExponential);

// Complete graph with i.i.d. Exponential(mean n) lengths drawn in (u < v)
// lexicographic order.
WeightedGraph gen_mean_field(Vertex n, std::uint64_t seed);

// Path 0-1-...-(n-1) with length(i-1, i) = 1 - i/n^2.
WeightedGraph gen_linear(Vertex n);

Instance generate(const InstanceSpec& spec);

}  // namespace nuv

#endif  // NUV_MODELS_H_
