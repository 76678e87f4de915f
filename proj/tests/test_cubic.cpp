#include <gtest/gtest.h>

#include "cyfib/cubic.hpp"
#include "oracles.hpp"

namespace cyfib {
namespace {

TEST(Weight, TableRows) {
  const BundlePair p{7, 3};
  // (monomial, expected multiple of L): c1(B) - 2aL + bL, c1(B) - aL, ...
  const std::pair<Monomial, std::int64_t> rows[] = {
      {{3, 0, 0}, -2 * 7 + 3}, {{2, 1, 0}, -7},    {{1, 2, 0}, -3},    {{0, 3, 0}, 7 - 2 * 3},
      {{2, 0, 1}, -7 + 3},     {{1, 1, 1}, 0},     {{0, 2, 1}, 7 - 3}, {{1, 0, 2}, 3},
      {{0, 1, 2}, 7},          {{0, 0, 3}, 7 + 3},
  };
  for (const auto& [mono, wL] : rows) EXPECT_EQ(weight(mono, p).wL, wL) << to_string(mono);
  EXPECT_EQ(weight(1, 1, 1, p).as_class(), BaseClass::divisor(0, 1));
}

TEST(Weight, SumRuleOverGrid) {
  for (std::int64_t a = 0; a <= 20; ++a)
    for (std::int64_t b = 0; b <= a; ++b)
      for (const auto& m : kCubicMonomials) {
        const auto w = weight(m, {a, b});
        EXPECT_EQ(m.i * a + m.j * b + w.wL, a + b);
      }
}

TEST(Weight, InvalidExponentsRejected) {
  EXPECT_THROW(weight(2, 2, 0, {1, 0}), std::invalid_argument);
  EXPECT_THROW(weight(-1, 2, 2, {1, 0}), std::invalid_argument);
}

TEST(Weight, LinesThroughTheReducibleConic) {
  // On b = a - m, with c1(B) = mL, the z-free weights are -(b+m), -b, m-b, 2m-b.
  for (std::int64_t m = 0; m <= 6; ++m)
    for (std::int64_t b = 0; b <= 20; ++b) {
      const BundlePair p{b + m, b};
      EXPECT_EQ(weight(3, 0, 0, p).wL + m, -(b + m));
      EXPECT_EQ(weight(2, 1, 0, p).wL + m, -b);
      EXPECT_EQ(weight(1, 2, 0, p).wL + m, m - b);
      EXPECT_EQ(weight(0, 3, 0, p).wL + m, 2 * m - b);
    }
}

TEST(CoefficientStatus, Certification) {
  const BaseSurface p2 = preset_projective_plane(1);
  EXPECT_EQ(coefficient_status({3, 0, 0}, {9, 6}, p2), CoefficientStatus::CertifiedZero);
  EXPECT_EQ(coefficient_status({1, 1, 1}, {9, 6}, p2), CoefficientStatus::PossiblyNonzero);
  EXPECT_EQ(coefficient_status({3, 0, 0}, {1, 1}, p2), CoefficientStatus::PossiblyNonzero);
  for (std::int64_t a = 0; a <= 20; ++a)
    for (std::int64_t b = 0; b <= a; ++b)
      EXPECT_EQ(coefficient_status({1, 1, 1}, {a, b}, fixtures::k3()),
                CoefficientStatus::PossiblyNonzero);
}

TEST(SectionGuaranteed, Examples) {
  const BaseSurface p2 = preset_projective_plane(1);
  EXPECT_TRUE(section_guaranteed({3, 0}, p2));
  EXPECT_FALSE(section_guaranteed({3, 3}, p2));
  EXPECT_TRUE(section_guaranteed({1, 0}, preset_projective_plane(5)));
}

TEST(ReducibilityCertified, Examples) {
  const BaseSurface p2 = preset_projective_plane(1);
  EXPECT_TRUE(reducibility_certified({10, 7}, p2));
  EXPECT_FALSE(reducibility_certified({9, 6}, p2));
  for (std::int64_t a = 0; a <= 50; ++a) EXPECT_FALSE(reducibility_certified({a, 0}, p2));
}

TEST(ReducibilityCertified, ImpliesSectionAndIsMonotoneAlongLines) {
  for (const auto& s : {preset_projective_plane(1), preset_del_pezzo_submultiple(8, 2),
                        fixtures::p1xp1_1_2(), fixtures::k3()})
    for (std::int64_t a = 0; a <= 30; ++a)
      for (std::int64_t b = 0; b <= a; ++b) {
        if (!reducibility_certified({a, b}, s)) continue;
        EXPECT_TRUE(section_guaranteed({a, b}, s));
        EXPECT_TRUE(reducibility_certified({a + 1, b + 1}, s));
      }
}

TEST(Discriminant, TwelveTimesAnticanonical) {
  const BaseSurface p2 = preset_projective_plane(1);
  const BaseClass delta = weierstrass_discriminant_weight(p2);
  EXPECT_EQ(delta, BaseClass::divisor(0, 12));
  EXPECT_EQ(multiply(delta, BaseClass::divisor(1, 0), p2).deg, 36);  // degree-36 plane curve
  EXPECT_EQ(self_intersection(delta, p2), 36 * 36);
  EXPECT_EQ(self_intersection(weierstrass_discriminant_weight(fixtures::k3()), fixtures::k3()), 0);
  const BaseSurface dp8 = preset_del_pezzo_submultiple(8, 2);
  EXPECT_EQ(self_intersection(weierstrass_discriminant_weight(dp8), dp8), 144 * 8);
}

}  // namespace
}  // namespace cyfib
