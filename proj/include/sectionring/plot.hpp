#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sectionring/explorer.hpp"
#include "sectionring/presentation.hpp"
#include "sectionring/rational.hpp"

namespace sectionring {

enum class MarkKind { kFilled, kOpen, kCross };

/// One dot on the degree / pole-order lattice. Filled dots may carry a short
/// annotation drawn next to them.
struct PlotMark {
  std::int64_t d = 0;
  std::int64_t c = 0;
  MarkKind kind = MarkKind::kOpen;
  std::string label;

  friend bool operator==(const PlotMark& a, const PlotMark& b) {
    return a.d == b.d && a.c == b.c && a.kind == b.kind && a.label == b.label;
  }
};

/// Lattice diagram: degree on the horizontal axis, pole order at P1 on the
/// vertical axis, plus boundary rays from the origin (one per slope; a
/// negative slope draws below the axis).
struct LatticePlot {
  std::string title;
  std::vector<Rational> boundaries;
  std::int64_t d_max = 0;
  std::vector<PlotMark> marks;  // sorted by (d, c, kind)

  std::vector<std::pair<std::int64_t, std::int64_t>> points(MarkKind k) const;
};

/// Figure for S_{alpha P}: generators filled and lettered, the rest of the
/// monoid open, the unreachable simple-pole row crossed out.
LatticePlot plot_one_point(const OnePointPresentation& pres, std::int64_t d_max);

/// Figure for an ineffective strip scan: candidates filled and lettered by
/// type, product-covered slots open, the excluded pole order crossed out
/// wherever it lies on or under the alpha1 ray.
LatticePlot plot_strip(const ConjectureScan& scan);

/// Figure for an effective two-point ring: generators only, poles at P1
/// plotted upward and poles at P2 downward.
LatticePlot plot_two_point(const TwoPointPresentation& pres);

/// Every layout constant used by the SVG renderer, in pixels.
struct PlotLayout {
  int unit = 42;
  int margin = 52;
  int dot_radius = 5;
  int cross_arm = 5;
  int stroke = 2;
  int axis_font = 12;
  int label_font = 13;
  int label_dx = 8;
  int label_dy = -8;
};

std::string svg_plot(const LatticePlot& plot, const PlotLayout& layout = PlotLayout());
std::string ascii_plot(const LatticePlot& plot);

}  // namespace sectionring
