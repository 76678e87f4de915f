#pragma once

// Test-only oracles. These deliberately avoid the library's algorithms: plain
// int64 arithmetic and exhaustive loops over small boxes.

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "cyfib/surface.hpp"

namespace cyfib::oracle {

using Point = std::pair<std::int64_t, std::int64_t>;

/// a(a-b) L^2 + (b-2a) c1.L + c1^2, written out directly.
inline std::int64_t residual(std::int64_t a, std::int64_t b, const BaseSurface& s) {
  return a * (a - b) * s.L2 + (b - 2 * a) * s.c1L + s.c1sq;
}

/// Exhaustive lattice scan of the octant box for residual-zero points.
inline std::set<Point> conic_scan(const BaseSurface& s, std::int64_t box) {
  std::set<Point> out;
  for (std::int64_t a = 0; a <= box; ++a)
    for (std::int64_t b = 0; b <= box; ++b)
      if (a >= b && residual(a, b, s) == 0) out.insert({a, b});
  return out;
}

/// Lattice points with a >= b >= 0 and 2a - b < n0, by scanning a generous square.
inline std::set<Point> small_region_scan(std::int64_t n0) {
  std::set<Point> out;
  for (std::int64_t a = 0; a <= 2 * n0 + 2; ++a)
    for (std::int64_t b = 0; b <= 2 * n0 + 2; ++b)
      if (a >= b && 2 * a - b < n0) out.insert({a, b});
  return out;
}

}  // namespace cyfib::oracle

namespace cyfib::fixtures {

// P1 x P1, L = f1 + 2 f2: c1 = 2f1 + 2f2, nL + K = (n-2) f1 + (2n-2) f2.
inline BaseSurface p1xp1_1_2() { return {"P1xP1, L = f1 + 2f2", 4, 6, 8, 4, 3, std::nullopt}; }
// P1 x P1, L = f1 + 3 f2.
inline BaseSurface p1xp1_1_3() { return {"P1xP1, L = f1 + 3f2", 6, 8, 8, 4, 3, std::nullopt}; }
// Blow-up of P2 at a point, L = 2h - e, nL + K = (2n-3) h - (n-1) e.
inline BaseSurface bl1p2_2h_e() { return {"Bl1P2, L = 2h - e", 3, 5, 8, 4, 3, std::nullopt}; }
// C x C for genus-2 curves, L = f1 + 2f2: K = 2f1 + 2f2 so nL + K is ample for n >= 0.
inline BaseSurface genus2_product() { return {"C2xC2, L = f1 + 2f2", 4, -6, 8, 4, 1, std::nullopt}; }
// Smooth quintic surface, L = H = K.
inline BaseSurface quintic() { return {"quintic, L = H", 5, -5, 5, 55, 1, std::nullopt}; }
// K3 surface with L^2 = 2.
inline BaseSurface k3() { return {"K3, L^2 = 2", 2, 0, 0, 24, 1, std::nullopt}; }

}  // namespace cyfib::fixtures
