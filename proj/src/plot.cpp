#include "sectionring/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace sectionring {

namespace {

int kind_rank(MarkKind k) { return k == MarkKind::kFilled ? 0 : k == MarkKind::kOpen ? 1 : 2; }

void sort_marks(std::vector<PlotMark>& marks) {
  std::sort(marks.begin(), marks.end(), [](const PlotMark& a, const PlotMark& b) {
    if (a.d != b.d) return a.d < b.d;
    if (a.c != b.c) return a.c < b.c;
    return kind_rank(a.kind) < kind_rank(b.kind);
  });
}

bool occupied(const std::vector<PlotMark>& marks, std::int64_t d, std::int64_t c) {
  for (const auto& m : marks)
    if (m.d == d && m.c == c) return true;
  return false;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> LatticePlot::points(MarkKind k) const {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& m : marks)
    if (m.kind == k) out.emplace_back(m.d, m.c);
  return out;
}

LatticePlot plot_one_point(const OnePointPresentation& pres, std::int64_t d_max) {
  LatticePlot plot;
  plot.title = "D = " + pres.alpha.str() + " P";
  plot.boundaries = {pres.alpha};
  plot.d_max = d_max;

  for (const auto& g : pres.gens)
    if (g.degree() <= d_max)
      plot.marks.push_back(
          {g.lattice.d, g.lattice.c, MarkKind::kFilled, std::string(1, to_char(g.label))});

  for (std::int64_t d = 0; d <= d_max; ++d) {
    std::int64_t top = (pres.alpha * Rational(d)).floor_i64();
    if (top >= 1) plot.marks.push_back({d, 1, MarkKind::kCross, ""});
    for (std::int64_t c = 0; c <= top; ++c)
      if (c != 1 && !occupied(plot.marks, d, c))
        plot.marks.push_back({d, c, MarkKind::kOpen, ""});
  }
  sort_marks(plot.marks);
  return plot;
}

LatticePlot plot_strip(const ConjectureScan& scan) {
  LatticePlot plot;
  plot.title = "D = " + scan.alpha1.str() + " P1 - " + scan.alpha2.str() + " P2";
  plot.boundaries = {scan.alpha1, scan.alpha2};
  plot.d_max = scan.d_max;

  for (const auto& cand : scan.candidates)
    plot.marks.push_back({cand.d, cand.c, MarkKind::kFilled, to_string(cand.type)});
  for (const auto& [d, c] : scan.unlabeled) plot.marks.push_back({d, c, MarkKind::kFilled, ""});
  for (const auto& [d, c] : scan.covered) plot.marks.push_back({d, c, MarkKind::kOpen, ""});

  IneffectiveStrip strip{scan.alpha1, scan.alpha2, scan.variant};
  for (std::int64_t d = 1; d <= scan.d_max; ++d) {
    std::int64_t ex = strip.excluded(d);
    if (ex <= strip.hi(d) && !occupied(plot.marks, d, ex))
      plot.marks.push_back({d, ex, MarkKind::kCross, ""});
  }
  sort_marks(plot.marks);
  return plot;
}

LatticePlot plot_two_point(const TwoPointPresentation& pres) {
  LatticePlot plot;
  plot.title = "D = " + pres.alpha1.str() + " P1 + " + pres.alpha2.str() + " P2";
  plot.boundaries = {pres.alpha1, -pres.alpha2};
  for (const auto& g : pres.gens) {
    plot.d_max = std::max(plot.d_max, g.degree());
    std::int64_t c = g.pole1 > 0 ? g.pole1 : -g.pole2;
    plot.marks.push_back({g.degree(), c, MarkKind::kFilled, std::string(1, to_char(g.label))});
  }
  sort_marks(plot.marks);
  return plot;
}

std::string svg_plot(const LatticePlot& plot, const PlotLayout& L) {
  std::int64_t c_min = 0, c_max = 1;
  for (const auto& m : plot.marks) {
    c_min = std::min(c_min, m.c);
    c_max = std::max(c_max, m.c);
  }
  const double span_x = static_cast<double>(plot.d_max) + 1.0;
  const double span_y = static_cast<double>(c_max - c_min) + 1.0;
  const int width = 2 * L.margin + static_cast<int>(span_x * L.unit);
  const int height = 2 * L.margin + static_cast<int>(span_y * L.unit);
  auto px = [&](double t) { return L.margin + (t + 0.5) * L.unit; };
  auto py = [&](double t) { return height - L.margin - (t - c_min + 0.5) * L.unit; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";
  os << "  <text x=\"" << width / 2 << "\" y=\"" << L.margin / 2
     << "\" text-anchor=\"middle\" font-size=\"" << L.label_font << "\">" << plot.title
     << "</text>\n";

  auto line = [&](double x1, double y1, double x2, double y2, int w) {
    os << "  <line x1=\"" << num(x1) << "\" y1=\"" << num(y1) << "\" x2=\"" << num(x2)
       << "\" y2=\"" << num(y2) << "\" stroke=\"black\" stroke-width=\"" << w << "\"/>\n";
  };

  line(px(-0.5), py(0), px(plot.d_max + 0.5), py(0), 1);
  line(px(0), py(c_min - 0.5), px(0), py(c_max + 0.5), 1);

  for (const auto& slope : plot.boundaries) {
    double s = static_cast<double>(slope.num_i64()) / static_cast<double>(slope.den_i64());
    double t_end = plot.d_max + 0.5;
    if (s > 0 && s * t_end > c_max + 0.5) t_end = (c_max + 0.5) / s;
    if (s < 0 && s * t_end < c_min - 0.5) t_end = (c_min - 0.5) / s;
    line(px(0), py(0), px(t_end), py(s * t_end), L.stroke);
  }

  const std::int64_t c_step = c_max - c_min > 30 ? 5 : 1;
  for (std::int64_t c = c_min; c <= c_max; ++c) {
    if (c % c_step != 0) continue;
    os << "  <text x=\"" << num(px(-0.5) - L.axis_font) << "\" y=\"" << num(py(c) + 4)
       << "\" text-anchor=\"middle\" font-size=\"" << L.axis_font << "\">" << c << "</text>\n";
  }
  for (std::int64_t d = 0; d <= plot.d_max; ++d)
    os << "  <text x=\"" << num(px(d)) << "\" y=\"" << height - L.margin / 4
       << "\" text-anchor=\"middle\" font-size=\"" << L.axis_font << "\">" << d << "</text>\n";

  for (const auto& m : plot.marks) {
    double x = px(m.d), y = py(m.c);
    switch (m.kind) {
      case MarkKind::kFilled:
        os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << L.dot_radius
           << "\" fill=\"black\"/>\n";
        break;
      case MarkKind::kOpen:
        os << "  <circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"" << L.dot_radius
           << "\" fill=\"white\" stroke=\"black\" stroke-width=\"" << L.stroke << "\"/>\n";
        break;
      case MarkKind::kCross:
        line(x - L.cross_arm, y, x + L.cross_arm, y, L.stroke);
        line(x, y - L.cross_arm, x, y + L.cross_arm, L.stroke);
        break;
    }
    if (!m.label.empty())
      os << "  <text x=\"" << num(x + L.label_dx) << "\" y=\"" << num(y + L.label_dy)
         << "\" font-size=\"" << L.label_font << "\" font-style=\"italic\">" << m.label
         << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string ascii_plot(const LatticePlot& plot) {
  std::int64_t c_min = 0, c_max = 1;
  for (const auto& m : plot.marks) {
    c_min = std::min(c_min, m.c);
    c_max = std::max(c_max, m.c);
  }

  std::ostringstream os;
  os << plot.title << "\n";
  for (std::int64_t c = c_max; c >= c_min; --c) {
    char head[16];
    std::snprintf(head, sizeof(head), "%4lld |", static_cast<long long>(c));
    os << head;
    for (std::int64_t d = 0; d <= plot.d_max; ++d) {
      std::string cell = "   ";
      for (const auto& m : plot.marks) {
        if (m.d != d || m.c != c) continue;
        cell[1] = m.kind == MarkKind::kFilled ? '*' : m.kind == MarkKind::kOpen ? 'o' : '+';
        if (m.kind == MarkKind::kFilled && !m.label.empty()) cell[2] = m.label[0];
        break;
      }
      os << cell;
    }
    os << "\n";
  }
  os << "     +";
  for (std::int64_t d = 0; d <= plot.d_max; ++d) os << "---";
  os << "\n      ";
  for (std::int64_t d = 0; d <= plot.d_max; ++d) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%3lld", static_cast<long long>(d));
    os << buf;
  }
  os << "\n  * generator   o element of the ring   + excluded pole order\n";
  return os.str();
}

}  // namespace sectionring
