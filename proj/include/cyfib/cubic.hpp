#pragma once

// Weights of the coefficients alpha_ijk of the anticanonical cubic
//   F = sum_{i+j+k=3} alpha_ijk x^i y^j z^k
// with x, y, z sections of O_Z(1) twisted by L^a, L^b, O. Every weight has
// the form c1(B) + wL * L, and vanishing is certified only when its negative
// K_B + (-wL) L is ample, i.e. -wL >= n0.

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyfib/chow.hpp"
#include "cyfib/surface.hpp"

namespace cyfib {

struct Monomial {
  int i = 0;  // power of x
  int j = 0;  // power of y
  int k = 0;  // power of z

  static Monomial make(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0 || i + j + k != 3)
      throw std::invalid_argument("cubic monomial exponents must be >= 0 and sum to 3");
    return {i, j, k};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline std::string to_string(const Monomial& m) {
  std::string out;
  auto put = [&](char var, int e) {
    if (e == 0) return;
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
  };
  put('x', m.i);
  put('y', m.j);
  put('z', m.k);
  return out;
}

/// The ten cubic monomials in the order x^3, x^2y, xy^2, y^3, x^2z, xyz,
/// y^2z, xz^2, yz^2, z^3.
inline constexpr std::array<Monomial, 10> kCubicMonomials{{
    {3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}, {2, 0, 1},
    {1, 1, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}, {0, 0, 3},
}};

/// Weight c1(B) + wL * L of alpha_ijk.
struct MonomialWeight {
  Monomial monomial;
  std::int64_t wL = 0;

  BaseClass as_class() const { return BaseClass::divisor(wL, 1); }
  friend bool operator==(const MonomialWeight&, const MonomialWeight&) = default;
};

enum class CoefficientStatus { CertifiedZero, PossiblyNonzero };

inline const char* to_string(CoefficientStatus s) {
  return s == CoefficientStatus::CertifiedZero ? "certified_zero" : "possibly_nonzero";
}

inline MonomialWeight weight(const Monomial& m, const BundlePair& pair) {
  const Monomial checked = Monomial::make(m.i, m.j, m.k);
  return {checked, (pair.a + pair.b) - checked.i * pair.a - checked.j * pair.b};
}

inline MonomialWeight weight(int i, int j, int k, const BundlePair& pair) {
  return weight(Monomial::make(i, j, k), pair);
}

inline CoefficientStatus coefficient_status(const Monomial& m, const BundlePair& pair,
                                            const BaseSurface& surface) {
  return -weight(m, pair).wL >= surface.n0 ? CoefficientStatus::CertifiedZero
                                           : CoefficientStatus::PossiblyNonzero;
}

/// alpha_300 vanishes identically, so (1:0:0) is a section.
inline bool section_guaranteed(const BundlePair& pair, const BaseSurface& surface) {
  return 2 * pair.a - pair.b >= surface.n0;
}

/// All z-free coefficients vanish, so F = z * f and X is reducible.
inline bool reducibility_certified(const BundlePair& pair, const BaseSurface& surface) {
  const std::int64_t margin =
      std::min({2 * pair.a - pair.b, pair.a, pair.b, 2 * pair.b - pair.a});
  return margin >= surface.n0;
}

/// Class of the Weierstrass discriminant 4 alpha_102^3 + 27 alpha_003^2 = 0,
/// i.e. 12 c1(F) with c1(F) = c1(B).
inline BaseClass weierstrass_discriminant_weight(const BaseSurface&) {
  return BaseClass::divisor(0, 12);
}

/// (x)^2 for a divisor class on B.
inline Rational self_intersection(const BaseClass& divisor, const BaseSurface& surface) {
  if (!divisor.pure_of_codim(1)) throw std::invalid_argument("self_intersection needs a divisor");
  return multiply(divisor, divisor, surface).deg;
}

}  // namespace cyfib
