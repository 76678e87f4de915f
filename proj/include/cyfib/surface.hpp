#pragma once

// Polarized surface (B, L) described purely by intersection numbers.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyfib/arith.hpp"

namespace cyfib {

/// Numerical proportionality r L == s c1(B), with r, s > 0 coprime.
struct Proportionality {
  std::int64_t r = 1;
  std::int64_t s = 1;

  Rational ratio() const { return Rational(r, s); }
  friend bool operator==(const Proportionality&, const Proportionality&) = default;
};

struct BaseSurface {
  std::string name;
  std::int64_t L2 = 1;    // L^2
  std::int64_t c1L = 0;   // c1(B).L
  std::int64_t c1sq = 0;  // c1(B)^2 = K_B^2
  std::int64_t c2 = 0;    // deg c2(B) = chi_top(B)
  std::int64_t n0 = 1;    // least n with nL + K_B ample for every n >= n0
  std::optional<Proportionality> proportionality;

  friend bool operator==(const BaseSurface&, const BaseSurface&) = default;
};

struct Violation {
  std::string identity;  // short machine name, e.g. "hodge_inequality"
  std::string detail;
};

struct ValidationResult {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool violates(const std::string& identity) const {
    for (const auto& v : violations)
      if (v.identity == identity) return true;
    return false;
  }
};

/// (c1.L)^2 - c1^2 L^2; non-negative for genuine surface data.
inline Integer hodge_discriminant_value(const BaseSurface& s) {
  return Integer(s.c1L) * s.c1L - Integer(s.c1sq) * s.L2;
}

/// c1.L / L^2 in lowest terms whenever the Hodge discriminant vanishes.
inline std::optional<Rational> proportional_ratio(const BaseSurface& s) {
  if (s.L2 <= 0 || hodge_discriminant_value(s) != 0) return std::nullopt;
  return Rational(Integer(s.c1L), Integer(s.L2));
}

/// Proportionality pair read off the intersection numbers. Only defined when
/// the discriminant vanishes and c1.L > 0, since (r, s) are positive.
inline std::optional<Proportionality> derive_proportionality(const BaseSurface& s) {
  const auto q = proportional_ratio(s);
  if (!q || *q <= 0) return std::nullopt;
  const Integer num = boost::multiprecision::numerator(*q);
  const Integer den = boost::multiprecision::denominator(*q);
  return Proportionality{num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>()};
}

/// Ampleness threshold forced by numerical proportionality: nL + K_B is
/// numerically (n - c1.L/L^2) L, which is ample iff n > c1.L/L^2.
inline std::optional<std::int64_t> forced_threshold(const BaseSurface& s) {
  const auto q = proportional_ratio(s);
  if (!q) return std::nullopt;
  Integer n = floor(*q) + 1;
  if (n < 1) n = 1;
  return n.convert_to<std::int64_t>();
}

inline ValidationResult validate(const BaseSurface& s) {
  ValidationResult out;
  auto fail = [&](std::string id, std::string detail) {
    out.violations.push_back({std::move(id), std::move(detail)});
  };

  if (s.L2 < 1) fail("ample_self_intersection", "L^2 = " + std::to_string(s.L2) + " must be >= 1");
  if (s.n0 < 1) fail("threshold_positive", "n0 = " + std::to_string(s.n0) + " must be >= 1");

  const Integer lhs = Integer(s.c1L) * s.c1L;
  const Integer rhs = Integer(s.c1sq) * s.L2;
  if (lhs < rhs)
    fail("hodge_inequality", "(c1.L)^2 = " + to_string(lhs) + " < c1^2 L^2 = " + to_string(rhs));

  const std::int64_t noether = s.c1sq + s.c2;
  if (noether % 12 != 0)
    fail("noether_integrality",
         "c1^2 + c2 = " + std::to_string(noether) + " is not divisible by 12");

  if (s.proportionality) {
    const auto [r, sv] = *s.proportionality;
    if (r < 1 || sv < 1 || gcd(Integer(r), Integer(sv)) != 1) {
      fail("proportionality_normalized",
           "(r, s) = (" + std::to_string(r) + ", " + std::to_string(sv) +
               ") must be positive and coprime");
    }
    if (Integer(sv) * s.c1L != Integer(r) * s.L2 || Integer(r) * s.c1L != Integer(sv) * s.c1sq) {
      fail("proportionality_identity",
           "r L == s c1(B) requires s c1.L = r L^2 and r c1.L = s c1^2");
    }
  }

  if (out.ok()) {
    if (const auto forced = forced_threshold(s); forced && *forced != s.n0) {
      fail("ampleness_threshold", "proportional data forces n0 = " + std::to_string(*forced) +
                                      ", got " + std::to_string(s.n0));
    }
  }
  return out;
}

/// Copy of `s` with proportionality filled in when it is derivable.
inline BaseSurface normalized(BaseSurface s) {
  if (!s.proportionality) s.proportionality = derive_proportionality(s);
  return s;
}

inline BaseSurface preset_projective_plane(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("projective plane preset needs d >= 1");
  BaseSurface s;
  s.name = "P2, L = " + std::to_string(d) + "l";
  s.L2 = d * d;
  s.c1L = 3 * d;
  s.c1sq = 9;
  s.c2 = 3;
  s.n0 = d == 1 ? 4 : (d <= 3 ? 2 : 1);
  const auto g = std::gcd(std::int64_t{3}, d);
  s.proportionality = Proportionality{3 / g, d / g};
  return s;
}

/// Del Pezzo surface of degree k with L numerically c1(B) / m.
inline BaseSurface preset_del_pezzo_submultiple(std::int64_t k, std::int64_t m) {
  if (k < 1 || k > 9) throw std::invalid_argument("del Pezzo degree k must lie in 1..9");
  if (m < 1) throw std::invalid_argument("del Pezzo submultiple needs m >= 1");
  if (k % (m * m) != 0)
    throw std::invalid_argument("m^2 must divide k for L^2 = k/m^2 to be an integer");
  BaseSurface s;
  s.name = "dP" + std::to_string(k) + ", L = -K/" + std::to_string(m);
  s.L2 = k / (m * m);
  s.c1L = k / m;
  s.c1sq = k;
  s.c2 = 12 - k;
  s.n0 = m + 1;
  s.proportionality = Proportionality{m, 1};
  return s;
}

}  // namespace cyfib
