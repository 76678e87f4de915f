#pragma once

// Exact arithmetic in the Chow ring of Z = P(L^a + L^b + O_B) over a surface B.
//
// Classes are polynomials of degree <= 2 in xi = c1(O_Z(1)) with coefficients
// pulled back from B. Base classes live in span{1, L, c1(B)} plus a degree
// slot for codimension two: every codim-2 class on B is only ever consumed
// through its degree, so it collapses to one number. Products of divisors
// collapse through the intersection matrix [[L^2, c1.L], [c1.L, c1^2]].
//
// The rank-3 Grothendieck relation (c3(E) = 0 because O_B is a summand)
//   xi^3 = -(a+b) L xi^2 - ab L^2 xi
// is applied after every product.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "cyfib/arith.hpp"
#include "cyfib/surface.hpp"

namespace cyfib {

/// Exponents of L^a + L^b + O_B, normalized to a >= b >= 0.
struct BundlePair {
  std::int64_t a = 0;
  std::int64_t b = 0;

  static BundlePair make(std::int64_t a, std::int64_t b) {
    if (!(a >= b && b >= 0))
      throw std::invalid_argument("bundle pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                  ") is outside the octant a >= b >= 0");
    return {a, b};
  }

  friend auto operator<=>(const BundlePair&, const BundlePair&) = default;
};

inline std::string to_string(const BundlePair& p) {
  return "(" + std::to_string(p.a) + ", " + std::to_string(p.b) + ")";
}

/// Element of the truncated numerical ring of B: unit + l L + k c1(B) + deg [pt].
struct BaseClass {
  Rational unit{};
  Rational l{};
  Rational c1{};
  Rational deg{};

  static BaseClass one() { return {1, 0, 0, 0}; }
  static BaseClass divisor(Rational l, Rational c1) { return {0, std::move(l), std::move(c1), 0}; }
  static BaseClass points(Rational deg) { return {0, 0, 0, std::move(deg)}; }

  bool is_zero() const { return unit == 0 && l == 0 && c1 == 0 && deg == 0; }

  /// True iff every nonzero part sits in base codimension `codim`.
  bool pure_of_codim(int codim) const {
    if (codim != 0 && unit != 0) return false;
    if (codim != 1 && (l != 0 || c1 != 0)) return false;
    if (codim != 2 && deg != 0) return false;
    return true;
  }

  BaseClass& operator+=(const BaseClass& o) {
    unit += o.unit;
    l += o.l;
    c1 += o.c1;
    deg += o.deg;
    return *this;
  }
  BaseClass& operator*=(const Rational& q) {
    unit *= q;
    l *= q;
    c1 *= q;
    deg *= q;
    return *this;
  }
  friend BaseClass operator+(BaseClass x, const BaseClass& y) { return x += y; }
  friend BaseClass operator*(const Rational& q, BaseClass x) { return x *= q; }
  friend BaseClass operator-(const BaseClass& x) { return Rational(-1) * x; }
  friend BaseClass operator-(const BaseClass& x, const BaseClass& y) { return x + (-y); }
  friend bool operator==(const BaseClass&, const BaseClass&) = default;
};

/// Intersection product on B, evaluated on the numerical profile.
inline BaseClass multiply(const BaseClass& x, const BaseClass& y, const BaseSurface& s) {
  BaseClass r;
  auto add = [](Rational& acc, const Rational& u, const Rational& v) {
    if (u != 0 && v != 0) acc += u * v;
  };
  add(r.unit, x.unit, y.unit);
  add(r.l, x.unit, y.l);
  add(r.l, x.l, y.unit);
  add(r.c1, x.unit, y.c1);
  add(r.c1, x.c1, y.unit);
  add(r.deg, x.unit, y.deg);
  add(r.deg, x.deg, y.unit);
  // Divisor pairs land in degree through the intersection matrix.
  if ((x.l != 0 || x.c1 != 0) && (y.l != 0 || y.c1 != 0)) {
    add(r.deg, x.l * y.l, Rational(s.L2));
    add(r.deg, x.l * y.c1 + x.c1 * y.l, Rational(s.c1L));
    add(r.deg, x.c1 * y.c1, Rational(s.c1sq));
  }
  return r;
}

/// Homogeneous class of codimension 0..4 on Z, sum over e of xi^e * base[e].
class ChowClass {
 public:
  static constexpr int kMaxCodim = 4;

  explicit ChowClass(int codim = 0) : codim_(codim) {
    if (codim < 0 || codim > kMaxCodim)
      throw std::out_of_range("Chow class codimension " + std::to_string(codim) +
                              " outside 0..4");
  }

  /// xi^e * p^*(base); `base` must be pure of codimension codim - e.
  static ChowClass term(int codim, int e, BaseClass base) {
    if (e < 0 || e > 2) throw std::out_of_range("reduced xi power must lie in 0..2");
    if (!base.pure_of_codim(codim - e))
      throw std::invalid_argument("base coefficient does not match codimension");
    ChowClass c(codim);
    c.xi_[static_cast<std::size_t>(e)] = std::move(base);
    return c;
  }

  int codim() const { return codim_; }
  const BaseClass& coefficient(int e) const { return xi_.at(static_cast<std::size_t>(e)); }
  BaseClass& coefficient(int e) { return xi_.at(static_cast<std::size_t>(e)); }

  bool is_zero() const {
    return xi_[0].is_zero() && xi_[1].is_zero() && xi_[2].is_zero();
  }

  bool is_homogeneous() const {
    for (int e = 0; e <= 2; ++e) {
      const int base_codim = codim_ - e;
      const auto& c = xi_[static_cast<std::size_t>(e)];
      if (base_codim < 0 || base_codim > 2) {
        if (!c.is_zero()) return false;
      } else if (!c.pure_of_codim(base_codim)) {
        return false;
      }
    }
    return true;
  }

  ChowClass& operator+=(const ChowClass& o) {
    require_same_codim(o);
    for (std::size_t e = 0; e < 3; ++e) xi_[e] += o.xi_[e];
    return *this;
  }
  ChowClass& operator-=(const ChowClass& o) {
    require_same_codim(o);
    for (std::size_t e = 0; e < 3; ++e) xi_[e] = xi_[e] - o.xi_[e];
    return *this;
  }
  ChowClass& operator*=(const Rational& q) {
    for (auto& c : xi_) c *= q;
    return *this;
  }
  friend ChowClass operator+(ChowClass x, const ChowClass& y) { return x += y; }
  friend ChowClass operator-(ChowClass x, const ChowClass& y) { return x -= y; }
  friend ChowClass operator*(const Rational& q, ChowClass x) { return x *= q; }
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

 private:
  void require_same_codim(const ChowClass& o) const {
    if (o.codim_ != codim_)
      throw std::invalid_argument("cannot add Chow classes of codimension " +
                                  std::to_string(codim_) + " and " + std::to_string(o.codim_));
  }

  int codim_;
  std::array<BaseClass, 3> xi_{};
};

/// The Chow ring of Z for a fixed pair and surface.
class ChowRing {
 public:
  ChowRing(BundlePair pair, BaseSurface surface) : pair_(pair), surface_(std::move(surface)) {}

  const BundlePair& pair() const { return pair_; }
  const BaseSurface& surface() const { return surface_; }

  ChowClass one() const { return ChowClass::term(0, 0, BaseClass::one()); }
  ChowClass constant(const Rational& q) const { return q * one(); }
  ChowClass xi() const { return ChowClass::term(1, 1, BaseClass::one()); }
  ChowClass L() const { return ChowClass::term(1, 0, BaseClass::divisor(1, 0)); }
  ChowClass c1B() const { return ChowClass::term(1, 0, BaseClass::divisor(0, 1)); }
  /// Pullback of c2(B), collapsed to its degree.
  ChowClass c2B() const { return ChowClass::term(2, 0, BaseClass::points(surface_.c2)); }
  ChowClass zero(int codim) const { return ChowClass(codim); }

  ChowClass mul(const ChowClass& x, const ChowClass& y) const {
    const int codim = x.codim() + y.codim();
    if (codim > ChowClass::kMaxCodim)
      throw std::domain_error("product codimension " + std::to_string(codim) + " exceeds dim Z = 4");

    std::array<BaseClass, 5> acc{};
    for (int i = 0; i <= 2; ++i) {
      if (x.coefficient(i).is_zero()) continue;
      for (int j = 0; j <= 2; ++j) {
        if (y.coefficient(j).is_zero()) continue;
        acc[static_cast<std::size_t>(i + j)] +=
            multiply(x.coefficient(i), y.coefficient(j), surface_);
      }
    }
    // xi^e beta -> xi^(e-1) (-(a+b) L beta) + xi^(e-2) (-ab L^2 beta), top down.
    const BaseClass sumL = BaseClass::divisor(-Rational(pair_.a + pair_.b), 0);
    const BaseClass prodL2 = BaseClass::points(-Rational(Integer(pair_.a) * pair_.b * surface_.L2));
    for (int e = 4; e >= 3; --e) {
      const BaseClass top = acc[static_cast<std::size_t>(e)];
      if (top.is_zero()) continue;
      acc[static_cast<std::size_t>(e)] = BaseClass{};
      acc[static_cast<std::size_t>(e - 1)] += multiply(sumL, top, surface_);
      acc[static_cast<std::size_t>(e - 2)] += multiply(prodL2, top, surface_);
    }

    ChowClass out(codim);
    for (int e = 0; e <= 2; ++e) out.coefficient(e) = acc[static_cast<std::size_t>(e)];
    return out;
  }

  ChowClass pow(const ChowClass& x, int n) const {
    ChowClass r = one();
    for (int i = 0; i < n; ++i) r = mul(r, x);
    return r;
  }

  /// p_*: xi^2 beta -> beta, lower xi powers -> 0.
  BaseClass pushforward(const ChowClass& x) const { return x.coefficient(2); }

  Rational degree(const ChowClass& x) const {
    if (x.codim() != ChowClass::kMaxCodim)
      throw std::domain_error("degree needs a codimension-4 class, got codimension " +
                              std::to_string(x.codim()));
    return pushforward(x).deg;
  }

 private:
  BundlePair pair_;
  BaseSurface surface_;
};

inline ChowClass mul(const ChowClass& x, const ChowClass& y, const BundlePair& pair,
                     const BaseSurface& surface) {
  return ChowRing(pair, surface).mul(x, y);
}

inline Rational degree(const ChowClass& x, const BaseSurface& surface) {
  return ChowRing(BundlePair{}, surface).degree(x);
}

/// Mixed-degree class, one pure component per codimension 0..4.
using TotalClass = std::array<ChowClass, 5>;

inline TotalClass total_zero() { return {ChowClass(0), ChowClass(1), ChowClass(2), ChowClass(3), ChowClass(4)}; }

inline TotalClass total_mul(const TotalClass& x, const TotalClass& y, const ChowRing& ring) {
  TotalClass out = total_zero();
  for (int i = 0; i <= 4; ++i)
    for (int j = 0; i + j <= 4; ++j) {
      const auto& xi = x[static_cast<std::size_t>(i)];
      const auto& yj = y[static_cast<std::size_t>(j)];
      if (xi.is_zero() || yj.is_zero()) continue;
      out[static_cast<std::size_t>(i + j)] += ring.mul(xi, yj);
    }
  return out;
}

/// 1 + d for a divisor class d.
inline TotalClass one_plus(const ChowClass& divisor, const ChowRing& ring) {
  TotalClass t = total_zero();
  t[0] = ring.one();
  t[1] = divisor;
  return t;
}

/// (1 + h)^{-1} = sum_k (-h)^k, truncated at codimension 4.
inline TotalClass inverse_one_plus(const ChowClass& h, const ChowRing& ring) {
  TotalClass t = total_zero();
  ChowClass power = ring.one();
  for (int k = 0; k <= 4; ++k) {
    t[static_cast<std::size_t>(k)] = (k % 2 == 0 ? Rational(1) : Rational(-1)) * power;
    if (k < 4) power = ring.mul(power, h);
  }
  return t;
}

struct AmbientChern {
  ChowClass c1{1}, c2{2}, c3{3}, c4{4};
  friend bool operator==(const AmbientChern&, const AmbientChern&) = default;
};

/// c(Z) = (1 + xi + aL)(1 + xi + bL)(1 + xi) * p^*(1 + c1(B) + c2(B)), expanded in the ring.
inline AmbientChern chern_ambient(const BundlePair& pair, const BaseSurface& surface) {
  const ChowRing ring(pair, surface);
  const ChowClass xi = ring.xi();
  TotalClass c = one_plus(xi + Rational(pair.a) * ring.L(), ring);
  c = total_mul(c, one_plus(xi + Rational(pair.b) * ring.L(), ring), ring);
  c = total_mul(c, one_plus(xi, ring), ring);

  TotalClass base = one_plus(ring.c1B(), ring);
  base[2] = ring.c2B();
  c = total_mul(c, base, ring);
  return {c[1], c[2], c[3], c[4]};
}

/// The same four classes assembled term by term from their closed forms.
inline AmbientChern chern_ambient_closed_form(const BundlePair& pair, const BaseSurface& surface) {
  const Rational s = pair.a + pair.b;
  const Rational p = Rational(pair.a) * pair.b;
  const Rational L2 = surface.L2, c1L = surface.c1L, c2 = surface.c2;
  AmbientChern z;
  z.c1 = ChowClass::term(1, 0, BaseClass::divisor(s, 1)) +
         ChowClass::term(1, 1, Rational(3) * BaseClass::one());
  z.c2 = ChowClass::term(2, 0, BaseClass::points(p * L2 + s * c1L + c2)) +
         ChowClass::term(2, 1, BaseClass::divisor(2 * s, 3)) +
         ChowClass::term(2, 2, Rational(3) * BaseClass::one());
  z.c3 = ChowClass::term(3, 1, BaseClass::points(2 * s * c1L + 3 * c2)) +
         ChowClass::term(3, 2, BaseClass::divisor(0, 3));
  z.c4 = ChowClass::term(4, 2, BaseClass::points(3 * c2));
  return z;
}

/// Ambient representatives of c(X) for X in |-K_Z|: c(Z) / (1 + c1(Z)).
struct CalabiYauChern {
  ChowClass c1{1}, c2{2}, c3{3};
};

inline CalabiYauChern chern_cy(const AmbientChern& z, const ChowRing& ring) {
  const TotalClass cz{ring.one(), z.c1, z.c2, z.c3, z.c4};
  const TotalClass cx = total_mul(cz, inverse_one_plus(z.c1, ring), ring);
  return {cx[1], cx[2], cx[3]};
}

inline CalabiYauChern chern_cy(const BundlePair& pair, const BaseSurface& surface) {
  return chern_cy(chern_ambient(pair, surface), ChowRing(pair, surface));
}

inline CalabiYauChern chern_cy_closed_form(const BundlePair& pair, const BaseSurface& surface) {
  const Rational s = pair.a + pair.b;
  const Rational p = Rational(pair.a) * pair.b;
  const Rational q = Rational(pair.a) * pair.a - p + Rational(pair.b) * pair.b;
  const Rational L2 = surface.L2, c1L = surface.c1L, c1sq = surface.c1sq, c2 = surface.c2;
  CalabiYauChern x;
  x.c2 = ChowClass::term(2, 2, Rational(3) * BaseClass::one()) +
         ChowClass::term(2, 1, BaseClass::divisor(2 * s, 3)) +
         ChowClass::term(2, 0, BaseClass::points(s * c1L + p * L2 + c2));
  x.c3 = ChowClass::term(3, 2, BaseClass::divisor(0, -9)) +
         ChowClass::term(3, 1, BaseClass::points(-(2 * q * L2 + 6 * s * c1L + 3 * c1sq)));
  return x;
}

/// -6(a^2 - ab + b^2) L^2 - 18 c1(B)^2.
inline Integer euler_characteristic_closed_form(const BundlePair& pair, const BaseSurface& surface) {
  const Integer a = pair.a, b = pair.b;
  return -6 * (a * a - a * b + b * b) * surface.L2 - 18 * Integer(surface.c1sq);
}

/// deg c3(X) = deg(psi_3 . [X]) with [X] = c1(Z) in Z.
inline Rational euler_characteristic_ring(const BundlePair& pair, const BaseSurface& surface) {
  const ChowRing ring(pair, surface);
  const AmbientChern z = chern_ambient(pair, surface);
  return ring.degree(ring.mul(chern_cy(z, ring).c3, z.c1));
}

inline Integer euler_characteristic(const BundlePair& pair, const BaseSurface& surface) {
  const Integer closed = euler_characteristic_closed_form(pair, surface);
  const Rational ring = euler_characteristic_ring(pair, surface);
  if (ring != Rational(closed))
    throw std::logic_error("Euler characteristic mismatch at " + to_string(pair) +
                           ": closed form " + to_string(closed) + ", ring " + to_string(ring));
  return closed;
}

/// Class of the section y = z = 0: (xi + bL) xi.
inline ChowClass section_class(const BundlePair& pair) {
  return ChowClass::term(2, 2, BaseClass::one()) +
         ChowClass::term(2, 1, BaseClass::divisor(pair.b, 0));
}

/// a(a - b) L^2 + (b - 2a) c1.L + c1^2.
inline Integer friedman_residual_closed_form(const BundlePair& pair, const BaseSurface& surface) {
  const Integer a = pair.a, b = pair.b;
  return a * (a - b) * surface.L2 + (b - 2 * a) * surface.c1L + surface.c1sq;
}

/// deg(c2(X) . S) computed through the ring.
inline Rational c2_dot_section(const BundlePair& pair, const BaseSurface& surface) {
  const ChowRing ring(pair, surface);
  return ring.degree(ring.mul(chern_cy(pair, surface).c2, section_class(pair)));
}

inline Rational friedman_residual_ring(const BundlePair& pair, const BaseSurface& surface) {
  return c2_dot_section(pair, surface) - Rational(surface.c2 - surface.c1sq);
}

/// c2(X).[S] - (chi_top(S) - K_S^2); zero is necessary for a smooth Calabi-Yau
/// with the section S. Both routes are evaluated and must agree.
inline Integer friedman_residual(const BundlePair& pair, const BaseSurface& surface) {
  const Integer closed = friedman_residual_closed_form(pair, surface);
  const Rational ring = friedman_residual_ring(pair, surface);
  if (ring != Rational(closed))
    throw std::logic_error("Friedman residual mismatch at " + to_string(pair) + ": closed form " +
                           to_string(closed) + ", ring " + to_string(ring));
  return closed;
}

struct SectionInvariants {
  BaseClass c1_normal;   // c1 of the section's normal bundle, pushed to B
  Integer S_cubed;       // [S]^3 = K_S^2
  Integer c2X_dot_S;     // c2(X).[S]

  /// c1 of the fundamental line bundle, the inverse of the normal bundle.
  BaseClass fundamental_class() const { return -c1_normal; }
};

inline SectionInvariants section_invariants(const BundlePair& pair, const BaseSurface& surface) {
  SectionInvariants inv;
  // [S]^2 = -i_* c1(S) and S ~ B, so N_{S|X} has c1 = -c1(B) = K_B.
  inv.c1_normal = BaseClass::divisor(0, -1);
  inv.S_cubed = surface.c1sq;
  inv.c2X_dot_S = as_integer(c2_dot_section(pair, surface));
  return inv;
}

inline std::string to_string(const BaseClass& c) {
  std::string out;
  auto append = [&](const Rational& q, const char* sym) {
    if (q == 0) return;
    std::string v = cyfib::to_string(q);
    if (!out.empty()) {
      if (q < 0) {
        out += " - ";
        v = cyfib::to_string(Rational(-q));
      } else {
        out += " + ";
      }
    }
    out += v;
    if (*sym) out += std::string("*") + sym;
  };
  append(c.unit, "");
  append(c.l, "L");
  append(c.c1, "c1");
  append(c.deg, "[pt]");
  return out.empty() ? "0" : out;
}

inline std::string to_string(const ChowClass& c) {
  std::string out;
  for (int e = 2; e >= 0; --e) {
    const auto& coeff = c.coefficient(e);
    if (coeff.is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(coeff) + ")";
    if (e >= 1) out += e == 1 ? "*xi" : "*xi^2";
  }
  return out.empty() ? "0" : out;
}

}  // namespace cyfib
