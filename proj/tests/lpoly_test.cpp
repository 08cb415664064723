#include <gtest/gtest.h>

#include "ascurve/errors.hpp"
#include "ascurve/lpoly.hpp"
#include "oracles.hpp"

using namespace ascurve;

namespace {

CurveInstance curve(std::uint32_t p, unsigned n, std::vector<Term> terms) {
  const auto F = make_field(p, n);
  return CurveInstance(F, Polynomial::from_terms(*F, std::move(terms)));
}

}  // namespace

TEST(LPolynomial, EllipticCurveOverF2) {
  const auto c = curve(2, 1, {{3, 1}});
  const auto L = l_polynomial(c, {}, 1);
  EXPECT_EQ(L.g, 1u);
  EXPECT_EQ(L.coeffs, (std::vector<BigInt>{1, 0, 2}));
  EXPECT_EQ(predicted_point_counts(L, 2), (std::vector<BigInt>{3, 9}));
}

TEST(LPolynomial, QuinticOverF32) {
  const auto c = curve(2, 5, {{5, 1}});
  EXPECT_EQ(count_curve_points(c, 1), 33);
  EXPECT_EQ(count_curve_points(c, 2), 1025);
  const auto L = l_polynomial(c, {}, 1);
  EXPECT_EQ(L.coeffs, (std::vector<BigInt>{1, 0, 0, 0, 1024}));
  EXPECT_TRUE(verify_weil_structure(L).all_pass());
  EXPECT_EQ(hasse_witt_invariant(L, 2), 0u);
}

TEST(LPolynomial, FirstCoefficientsOverF32) {
  const auto a = l_polynomial(curve(2, 5, {{3, 1}, {1, 1}}));
  EXPECT_EQ(count_curve_points(curve(2, 5, {{3, 1}, {1, 1}}), 1), 25);
  EXPECT_EQ(a.coeffs[1], -8);
  EXPECT_EQ(l_polynomial(curve(2, 5, {{3, 1}})).coeffs[1], 0);
  EXPECT_EQ(l_polynomial(curve(2, 5, {{5, 1}, {3, 1}, {1, 1}})).coeffs[1], 0);
}

TEST(LPolynomial, PredictionsMatchIndependentCounts) {
  // L from N(1..g) predicts N(g+1) and N(g+2), counted here by the oracle
  const auto c = curve(3, 1, {{4, 1}, {1, 2}});  // g = 3
  const auto L = l_polynomial(c);
  ASSERT_EQ(L.g, 3u);
  const auto predicted = predicted_point_counts(L, 5);
  for (unsigned i = 4; i <= 5; ++i) {
    const oracle::SchoolField S(3, i);
    EXPECT_EQ(predicted[i - 1], BigInt(oracle::curve_points_by_pairs(S, {{4, 1}, {1, 2}}))) << i;
  }
  EXPECT_TRUE(verify_weil_structure(L).all_pass());
}

TEST(LPolynomial, HasseWittVanishesAcrossTheFamily) {
  for (const auto& c : {curve(2, 3, {{5, 1}, {1, 1}}), curve(3, 2, {{2, 1}}),
                        curve(3, 1, {{5, 1}, {2, 1}}), curve(5, 1, {{3, 1}, {1, 1}}),
                        curve(2, 2, {{7, 1}})}) {
    const auto L = l_polynomial(c, {}, 1);
    EXPECT_TRUE(verify_weil_structure(L).all_pass());
    EXPECT_EQ(hasse_witt_invariant(L, c.field()->characteristic()), 0u);
    EXPECT_EQ(predicted_hasse_witt_artin_schreier(c), 0u);
  }
}

TEST(LPolynomial, InconsistentCountsAreRejected) {
  const std::vector<BigInt> counts{3};
  const std::vector<BigInt> wrong_extra{10};
  try {
    l_polynomial_from_counts(2, 1, counts, wrong_extra);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent_counts);
  }
  // N(1), N(2) that force a non-integral a_2 for q = 2, g = 2
  const std::vector<BigInt> odd{4, 5};
  EXPECT_THROW(l_polynomial_from_counts(2, 2, odd), Error);
}

TEST(LPolynomial, ConstantAndWildDegreesAreRejected) {
  EXPECT_THROW(l_polynomial(curve(2, 3, {{0, 1}})), Error);
}

TEST(LPolynomial, FunctionalEquationHolds) {
  const auto L = l_polynomial(curve(3, 2, {{4, 1}, {1, 1}}));
  for (unsigned i = 0; i <= L.g; ++i) EXPECT_EQ(L.coeffs[2 * L.g - i], ipow(L.q, L.g - i) * L.coeffs[i]);
}
