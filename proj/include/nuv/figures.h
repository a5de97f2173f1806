#ifndef NUV_FIGURES_H_
#define NUV_FIGURES_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nuv/cover.h"
#include "nuv/graph.h"
#include "nuv/walk.h"

namespace nuv {

enum class FigureKind { kWalkPolyline, kStepHistogram, kMultiStartOverlay, kCoverProfile };

std::string_view to_string(FigureKind k);
FigureKind parse_figure_kind(std::string_view name);

// step,x0,y0,x1,y1: one segment per traversed edge. Uses step paths when the
// walk kept them, otherwise straight segments between consecutive visits.
// Throws InputError when `points` does not match the walk.
void write_polyline_csv(std::ostream& out, std::span<const Point> points,
                        const WalkResult& walk);

// start,step,x0,y0,x1,y1 for several walks over the same points.
void write_overlay_csv(std::ostream& out, std::span<const Point> points,
                       std::span<const WalkResult> walks);

// bin_lo,bin_hi,count
void write_histogram_csv(std::ostream& out, const Histogram& h);

// Minimal SVG: points as dots, one colored polyline per walk.
std::string render_svg(std::span<const Point> points, std::span<const WalkResult> walks,
                       double size_px = 600.0);

}  // namespace nuv

#endif  // NUV_FIGURES_H_
