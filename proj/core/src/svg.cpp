#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "cladder/cpd.hpp"

namespace cladder {

namespace {

struct Canvas {
  double size = 480.0;
  double margin = 48.0;
  double lo, hi;  // data range

  double sx(double v) const { return margin + (v - lo) / (hi - lo) * (size - 2 * margin); }
  double sy(double v) const { return size - margin - (v - lo) / (hi - lo) * (size - 2 * margin); }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << v;
  return os.str();
}

// saturation in [0.25, 1] scaled by |multiplicity| / max
std::string color(int mult, int max_abs, bool upper_point) {
  double s = max_abs == 0 ? 1.0 : 0.25 + 0.75 * std::abs(mult) / static_cast<double>(max_abs);
  int c = static_cast<int>(255 * (1.0 - s));
  std::ostringstream os;
  if (upper_point)
    os << "rgb(" << c << "," << c << ",200)";
  else
    os << "rgb(200," << c << "," << c << ")";
  return os.str();
}

void axes(std::ostringstream& os, const Canvas& cv, const ConnectedPD& cpd) {
  os << "<line x1=\"" << fmt(cv.sx(cv.lo)) << "\" y1=\"" << fmt(cv.sy(cv.lo)) << "\" x2=\""
     << fmt(cv.sx(cv.hi)) << "\" y2=\"" << fmt(cv.sy(cv.lo)) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(cv.sx(cv.lo)) << "\" y1=\"" << fmt(cv.sy(cv.lo)) << "\" x2=\""
     << fmt(cv.sx(cv.lo)) << "\" y2=\"" << fmt(cv.sy(cv.hi)) << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << fmt(cv.sx(cv.lo)) << "\" y1=\"" << fmt(cv.sy(cv.lo)) << "\" x2=\""
     << fmt(cv.sx(cv.hi)) << "\" y2=\"" << fmt(cv.sy(cv.hi)) << "\" stroke=\"gray\" stroke-dasharray=\"2 4\"/>\n";
  for (int t = cpd.x_lo; t <= cpd.n + cpd.x_lo; ++t) {
    std::string label = std::to_string(t);
    auto it = cpd.axis_labels.find(t);
    if (it != cpd.axis_labels.end()) label = fmt(it->second);
    os << "<text x=\"" << fmt(cv.sx(t)) << "\" y=\"" << fmt(cv.sy(cv.lo) + 16) << "\" font-size=\"9\" "
       << "text-anchor=\"middle\">" << label << "</text>\n";
    os << "<text x=\"" << fmt(cv.sx(cv.lo) - 6) << "\" y=\"" << fmt(cv.sy(t) + 3) << "\" font-size=\"9\" "
       << "text-anchor=\"end\">" << label << "</text>\n";
  }
}

}  // namespace

std::string render_cpd(const ConnectedPD& cpd, CpdStyle style) {
  Canvas cv;
  cv.lo = cpd.x_lo - 1;
  cv.hi = cpd.x_lo + cpd.n + 1;  // room for the exclusive death n+1
  int max_abs = 1;
  for (const auto& [k, v] : cpd.lower) max_abs = std::max(max_abs, std::abs(v));
  for (const auto& [k, v] : cpd.upper) max_abs = std::max(max_abs, std::abs(v));
  for (const auto& [k, v] : cpd.connecting) max_abs = std::max(max_abs, std::abs(v));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(cv.size)
     << "\" height=\"" << fmt(cv.size) << "\" viewBox=\"0 0 " << fmt(cv.size) << " " << fmt(cv.size)
     << "\">\n";
  axes(os, cv, cpd);

  // connecting segments first (ascending |multiplicity| so strong features render on top)
  std::vector<std::pair<std::array<int, 4>, int>> segs(cpd.connecting.begin(), cpd.connecting.end());
  std::stable_sort(segs.begin(), segs.end(),
                   [](const auto& a, const auto& b) { return std::abs(a.second) < std::abs(b.second); });
  for (const auto& [k, v] : segs) {
    auto [b2, d2, b1, d1] = k;
    double x1, y1, x2, y2;
    if (style == CpdStyle::triangles) {
      // upper point (b2, d2+1) to lower-triangle point (d1+1, b1)
      x1 = cv.sx(b2);
      y1 = cv.sy(d2 + 1);
      x2 = cv.sx(d1 + 1);
      y2 = cv.sy(b1);
    } else {
      // layered: both endpoints plotted as PD points in the upper triangle
      x1 = cv.sx(b2);
      y1 = cv.sy(d2 + 1);
      x2 = cv.sx(b1);
      y2 = cv.sy(d1 + 1);
    }
    os << "<line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2) << "\" y2=\""
       << fmt(y2) << "\" stroke=\"" << (v < 0 ? "rgb(60,160,60)" : "rgb(60,120,60)") << "\" stroke-width=\""
       << fmt(0.8 + 1.6 * std::abs(v) / static_cast<double>(max_abs)) << "\""
       << (v < 0 ? " stroke-dasharray=\"5 4\"" : "") << "/>\n";
  }
  for (const auto& [k, v] : cpd.upper) {
    os << "<circle cx=\"" << fmt(cv.sx(k.first)) << "\" cy=\"" << fmt(cv.sy(k.second + 1))
       << "\" r=\"3.5\" fill=\"" << color(v, max_abs, true) << "\"/>\n";
  }
  for (const auto& [k, v] : cpd.lower) {
    double cx = style == CpdStyle::triangles ? cv.sx(k.second + 1) : cv.sx(k.first);
    double cy = style == CpdStyle::triangles ? cv.sy(k.first) : cv.sy(k.second + 1);
    os << "<circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy) << "\" r=\"3.5\" fill=\""
       << color(v, max_abs, false) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace cladder
