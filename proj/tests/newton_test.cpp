#include <gtest/gtest.h>

#include <random>

#include "ascurve/errors.hpp"
#include "ascurve/newton.hpp"
#include "oracles.hpp"

using namespace ascurve;

namespace {

std::vector<RootValuation> roots_of(std::vector<BigInt> coeffs, std::uint64_t p) {
  return root_valuations(build_polygon(coeffs, p));
}

}  // namespace

TEST(NewtonPolygon, UnitCoefficientsAreFlat) {
  EXPECT_EQ(roots_of({1, 1, 1, 1}, 2), (std::vector<RootValuation>{{Rational(0), 3}}));
}

TEST(NewtonPolygon, HalfSlope) {
  const auto np = build_polygon(std::vector<BigInt>{2, 0, 1}, 2);
  ASSERT_EQ(np.segments.size(), 1u);
  EXPECT_EQ(np.segments[0].slope, Rational(-1, 2));
  EXPECT_EQ(np.segments[0].length, 2u);
}

TEST(NewtonPolygon, ProductOfLinearFactors) {
  for (std::int64_t p : {2, 3, 5, 7}) {
    // (T - p)(T - 1) = p - (p + 1) T + T^2
    const auto np = build_polygon(std::vector<BigInt>{p, -(p + 1), 1}, p);
    ASSERT_EQ(np.segments.size(), 2u);
    EXPECT_EQ(np.segments[0].slope, Rational(-1));
    EXPECT_EQ(np.segments[1].slope, Rational(0));
  }
}

TEST(NewtonPolygon, CollinearPointsMerge) {
  // valuations 3, 2, 1, 0 lie on one line
  const auto np = build_polygon(std::vector<BigInt>{8, 4, 2, 1}, 2);
  EXPECT_EQ(np.vertices.size(), 2u);
  EXPECT_EQ(np.segments.size(), 1u);
  EXPECT_EQ(np.segments[0].length, 3u);
}

TEST(NewtonPolygon, MatchesChordOracleOnRandomPolynomials) {
  std::mt19937_64 rng(99);
  const std::uint64_t primes[] = {2, 3, 5};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = primes[rng() % 3];
    const std::size_t degree = 1 + rng() % 10;
    std::vector<BigInt> coeffs(degree + 1);
    for (auto& c : coeffs) {
      c = BigInt(static_cast<std::int64_t>(rng() % 41) - 20) * ipow(BigInt(p), rng() % 6);
      if (rng() % 3 == 0) c = 0;
    }
    if (coeffs.front() == 0) coeffs.front() = p;
    if (coeffs.back() == 0) coeffs.back() = 1;
    std::vector<std::pair<std::int64_t, std::int64_t>> pts;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      if (coeffs[i] != 0) pts.emplace_back(i, static_cast<std::int64_t>(valuation(coeffs[i], p)));
    const auto expected = oracle::hull_by_chords(pts);
    const auto np = build_polygon(coeffs, p);
    ASSERT_EQ(np.segments.size(), expected.size());
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(np.segments[i].slope, Rational(expected[i].num, expected[i].den));
      EXPECT_EQ(np.segments[i].length, expected[i].length);
      total += np.segments[i].length;
    }
    EXPECT_EQ(total, degree);
  }
}

TEST(NewtonPolygon, RejectsZeroEnds) {
  EXPECT_THROW(build_polygon(std::vector<BigInt>{0, 1}, 2), Error);
  EXPECT_THROW(build_polygon(std::vector<BigInt>{1, 0}, 2), Error);
  EXPECT_THROW(build_polygon(std::vector<BigInt>{1, 1}, 4), Error);
}

TEST(NewtonPolygon, FirstCoefficientValuation) {
  LPolynomial L{32, 1, {1, -8, 32}};
  const auto check = check_a1_valuation(L, 2, 5);
  EXPECT_EQ(check.required, Rational(3));
  ASSERT_TRUE(check.actual);
  EXPECT_EQ(*check.actual, 3u);
  EXPECT_TRUE(check.pass);

  LPolynomial weak{32, 1, {1, -4, 32}};
  EXPECT_FALSE(check_a1_valuation(weak, 2, 5).pass);

  LPolynomial zero{32, 2, {1, 0, 0, 0, 1024}};
  const auto z = check_a1_valuation(zero, 2, 5);
  EXPECT_TRUE(z.pass);
  EXPECT_FALSE(z.actual);

  LPolynomial genus0{32, 0, {1}};
  EXPECT_THROW(check_a1_valuation(genus0, 2, 5), Error);
  EXPECT_THROW(check_a1_valuation(L, 2, 4), Error);
}
