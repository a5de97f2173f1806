#include "nuv/figures.h"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>

#include "nuv/error.h"
#include "nuv/io.h"

namespace nuv {
namespace {

void check_points(std::span<const Point> points, const WalkResult& walk) {
  if (points.empty()) {
    throw InputError("figure needs point coordinates; only geometric (square) instances have them");
  }
  if (points.size() != walk.order.size()) {
    throw InputError("point count does not match the walk");
  }
}

// Edge-level segments of a walk.
template <typename F>
void for_each_segment(const WalkResult& walk, F&& f) {
  const bool paths = walk.step_paths.size() == walk.step_distances.size();
  for (std::size_t i = 0; i < walk.step_distances.size(); ++i) {
    if (paths) {
      const auto& p = walk.step_paths[i];
      for (std::size_t k = 1; k < p.size(); ++k) f(i + 1, p[k - 1], p[k]);
    } else {
      f(i + 1, walk.order[i], walk.order[i + 1]);
    }
  }
}

}  // namespace

std::string_view to_string(FigureKind k) {
  switch (k) {
    case FigureKind::kWalkPolyline:
      return "walk_polyline";
    case FigureKind::kStepHistogram:
      return "step_histogram";
    case FigureKind::kMultiStartOverlay:
      return "multi_start_overlay";
    case FigureKind::kCoverProfile:
      return "cover_profile";
  }
  return "unknown";
}

FigureKind parse_figure_kind(std::string_view name) {
  for (auto k : {FigureKind::kWalkPolyline, FigureKind::kStepHistogram,
                 FigureKind::kMultiStartOverlay, FigureKind::kCoverProfile}) {
    if (name == to_string(k)) return k;
  }
  throw InputError("unknown figure kind '" + std::string(name) +
                   "' (expected walk_polyline, step_histogram, multi_start_overlay or cover_profile)");
}

void write_polyline_csv(std::ostream& out, std::span<const Point> points, const WalkResult& walk) {
  check_points(points, walk);
  out << "step,x0,y0,x1,y1\n";
  for_each_segment(walk, [&](std::size_t step, Vertex a, Vertex b) {
    out << step << ',' << format_double(points[a].x) << ',' << format_double(points[a].y) << ','
        << format_double(points[b].x) << ',' << format_double(points[b].y) << '\n';
  });
}

void write_overlay_csv(std::ostream& out, std::span<const Point> points,
                       std::span<const WalkResult> walks) {
  out << "start,step,x0,y0,x1,y1\n";
  for (const auto& walk : walks) {
    check_points(points, walk);
    for_each_segment(walk, [&](std::size_t step, Vertex a, Vertex b) {
      out << walk.start << ',' << step << ',' << format_double(points[a].x) << ','
          << format_double(points[a].y) << ',' << format_double(points[b].x) << ','
          << format_double(points[b].y) << '\n';
    });
  }
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t k = 0; k < h.counts.size(); ++k) {
    const double lo = static_cast<double>(h.first_bin + static_cast<std::int64_t>(k)) * h.bin_width;
    out << format_double(lo) << ',' << format_double(lo + h.bin_width) << ',' << h.counts[k] << '\n';
  }
}

std::string render_svg(std::span<const Point> points, std::span<const WalkResult> walks,
                       double size_px) {
  static constexpr std::array<const char*, 6> kColors{"#d62728", "#1f77b4", "#2ca02c",
                                                      "#9467bd", "#ff7f0e", "#8c564b"};
  double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
  if (!points.empty()) {
    lo_x = hi_x = points[0].x;
    lo_y = hi_y = points[0].y;
    for (const auto& p : points) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double margin = 10.0;
  const double scale = (size_px - 2 * margin) / span;
  auto sx = [&](double x) { return margin + (x - lo_x) * scale; };
  auto sy = [&](double y) { return size_px - margin - (y - lo_y) * scale; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size_px << "\" height=\""
      << size_px << "\" viewBox=\"0 0 " << size_px << ' ' << size_px << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t w = 0; w < walks.size(); ++w) {
    check_points(points, walks[w]);
    svg << "<polyline fill=\"none\" stroke=\"" << kColors[w % kColors.size()]
        << "\" stroke-width=\"1\" stroke-opacity=\"0.8\" points=\"";
    const auto& walk = walks[w];
    const bool paths = walk.step_paths.size() == walk.step_distances.size();
    std::vector<Vertex> seq;
    if (paths && !walk.step_paths.empty()) {
      seq.push_back(walk.order.front());
      for (const auto& p : walk.step_paths) seq.insert(seq.end(), p.begin() + 1, p.end());
    } else {
      seq = walk.order;
    }
    for (Vertex v : seq) svg << sx(points[v].x) << ',' << sy(points[v].y) << ' ';
    svg << "\"/>\n";
  }
  for (const auto& p : points) {
    svg << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"1.5\" fill=\"black\"/>\n";
  }
  for (std::size_t w = 0; w < walks.size(); ++w) {
    const auto& p = points[walks[w].start];
    svg << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"4\" fill=\""
        << kColors[w % kColors.size()] << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace nuv
