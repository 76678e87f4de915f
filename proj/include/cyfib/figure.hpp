#pragma once

// Static SVG picture of the (a, b) octant: shaded small region, the conic
// (hyperbola or its two lines) and the enumerated pairs colored by status.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cyfib/enumerate.hpp"

namespace cyfib {

namespace detail {

inline std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

inline const char* status_color(PairStatus s) {
  switch (s) {
    case PairStatus::UnknownSection: return "#e69f00";
    case PairStatus::CandidateCalabiYau: return "#0072b2";
    case PairStatus::FailsNecessaryCondition: return "#999999";
    case PairStatus::CertifiedReducible: return "#d55e00";
  }
  return "#000000";
}

struct Viewport {
  double left = 60, top = 40, size = 440;
  double extent = 10;  // data range [0, extent] on both axes

  double x(double a) const { return left + a / extent * size; }
  double y(double b) const { return top + size - b / extent * size; }
};

// Clips the segment to the square [0, extent]^2 (Liang-Barsky).
inline bool clip(double& x0, double& y0, double& x1, double& y1, double extent) {
  double t0 = 0, t1 = 1;
  const double dx = x1 - x0, dy = y1 - y0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {x0, extent - x0, y0, extent - y0};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0) {
      if (q[i] < 0) return false;
      continue;
    }
    const double t = q[i] / p[i];
    if (p[i] < 0) t0 = std::max(t0, t);
    else t1 = std::min(t1, t);
  }
  if (t0 > t1) return false;
  const double nx0 = x0 + t0 * dx, ny0 = y0 + t0 * dy;
  x1 = x0 + t1 * dx;
  y1 = y0 + t1 * dy;
  x0 = nx0;
  y0 = ny0;
  return true;
}

inline void line(std::ostringstream& os, const Viewport& vp, double a0, double b0, double a1,
                 double b1, const char* style) {
  if (!clip(a0, b0, a1, b1, vp.extent)) return;
  os << "  <line x1=\"" << fmt(vp.x(a0)) << "\" y1=\"" << fmt(vp.y(b0)) << "\" x2=\""
     << fmt(vp.x(a1)) << "\" y2=\"" << fmt(vp.y(b1)) << "\" " << style << "/>\n";
}

}  // namespace detail

inline std::string render_svg(const EnumerationReport& rep) {
  using namespace detail;
  const BaseSurface& s = rep.surface;

  std::int64_t reach = std::max<std::int64_t>(s.n0, 3);
  for (const auto& r : rep.pairs) reach = std::max(reach, r.pair.a);
  Viewport vp;
  vp.extent = static_cast<double>(reach + 2);

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"540\" "
        "viewBox=\"0 0 720 540\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "  <rect width=\"720\" height=\"540\" fill=\"white\"/>\n";
  os << "  <text x=\"60\" y=\"24\" font-size=\"14\">" << xml_escape(s.name)
     << ": pairs (a, b), branch " << to_string(rep.branch) << "</text>\n";

  // Grid and axes.
  const std::int64_t step = reach > 40 ? 10 : (reach > 15 ? 5 : 1);
  for (std::int64_t t = 0; t <= reach + 2; t += step) {
    const double v = static_cast<double>(t);
    line(os, vp, v, 0, v, vp.extent, "stroke=\"#eeeeee\"");
    line(os, vp, 0, v, vp.extent, v, "stroke=\"#eeeeee\"");
    os << "  <text x=\"" << fmt(vp.x(v)) << "\" y=\"" << fmt(vp.y(0) + 16)
       << "\" text-anchor=\"middle\">" << t << "</text>\n";
    os << "  <text x=\"" << fmt(vp.x(0) - 8) << "\" y=\"" << fmt(vp.y(v) + 4)
       << "\" text-anchor=\"end\">" << t << "</text>\n";
  }
  line(os, vp, 0, 0, vp.extent, 0, "stroke=\"black\"");
  line(os, vp, 0, 0, 0, vp.extent, "stroke=\"black\"");
  line(os, vp, 0, 0, vp.extent, vp.extent, "stroke=\"black\" stroke-dasharray=\"2,3\"");
  os << "  <text x=\"" << fmt(vp.x(vp.extent) + 10) << "\" y=\"" << fmt(vp.y(0) + 4) << "\">a</text>\n";
  os << "  <text x=\"" << fmt(vp.x(0) - 4) << "\" y=\"" << fmt(vp.y(vp.extent) - 8) << "\">b</text>\n";

  // Small region: triangle (0,0), (n0/2, 0), (n0, n0) bounded by 2a - b = n0.
  const double n0 = static_cast<double>(s.n0);
  os << "  <polygon class=\"small-region\" points=\"" << fmt(vp.x(0)) << ',' << fmt(vp.y(0)) << ' '
     << fmt(vp.x(n0 / 2)) << ',' << fmt(vp.y(0)) << ' ' << fmt(vp.x(n0)) << ',' << fmt(vp.y(n0))
     << "\" fill=\"#e69f00\" fill-opacity=\"0.15\" stroke=\"#e69f00\" stroke-dasharray=\"4,2\"/>\n";

  // Conic.
  const char* conic_style = "class=\"conic\" stroke=\"#009e73\" stroke-width=\"1.5\" fill=\"none\"";
  const double q = static_cast<double>(s.c1L) / static_cast<double>(s.L2);
  if (rep.branch == Branch::Irreducible) {
    const double D = static_cast<double>(rep.hodge_discriminant.convert_to<long double>());
    const double L2 = static_cast<double>(s.L2), c1L = static_cast<double>(s.c1L);
    auto b_of = [&](double a) { return a - (D / (L2 * a - c1L) + c1L) / L2; };
    const int samples = 400;
    for (int side = 0; side < 2; ++side) {
      const double lo = side == 0 ? -vp.extent : q + 1e-3;
      const double hi = side == 0 ? q - 1e-3 : 2 * vp.extent;
      if (lo >= hi) continue;
      for (int n = 0; n < samples; ++n) {
        const double a0 = lo + (hi - lo) * n / samples, a1 = lo + (hi - lo) * (n + 1) / samples;
        line(os, vp, a0, b_of(a0), a1, b_of(a1), conic_style);
      }
    }
  } else {
    line(os, vp, q, -vp.extent, q, 2 * vp.extent, conic_style);
    line(os, vp, q - vp.extent, -vp.extent, q + 2 * vp.extent, 2 * vp.extent, conic_style);
  }

  for (const auto& r : rep.pairs) {
    const double a = static_cast<double>(r.pair.a), b = static_cast<double>(r.pair.b);
    os << "  <circle class=\"pair\" data-status=\"" << to_string(r.status) << "\" cx=\""
       << fmt(vp.x(a)) << "\" cy=\"" << fmt(vp.y(b)) << "\" r=\"4\" fill=\""
       << status_color(r.status) << "\"><title>" << to_string(r.pair) << ' '
       << to_string(r.status) << "</title></circle>\n";
  }

  // Legend.
  const PairStatus legend[] = {PairStatus::UnknownSection, PairStatus::CandidateCalabiYau,
                               PairStatus::FailsNecessaryCondition, PairStatus::CertifiedReducible};
  for (int n = 0; n < 4; ++n) {
    const double y = 60 + 20 * n;
    os << "  <circle cx=\"540\" cy=\"" << fmt(y) << "\" r=\"4\" fill=\"" << status_color(legend[n])
       << "\"/>\n  <text x=\"550\" y=\"" << fmt(y + 4) << "\">" << to_string(legend[n]) << "</text>\n";
  }
  os << "  <text x=\"550\" y=\"144\" fill=\"#009e73\">conic</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace cyfib
