#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "ascurve/codes.hpp"
#include "ascurve/errors.hpp"
#include "oracles.hpp"

using namespace ascurve;

TEST(Codes, EchelonRankAndSameCode) {
  const LinearCode a(3, 4, {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}});
  EXPECT_EQ(a.dimension(), 2u);
  const LinearCode b(3, 4, {{0, 0, 2, 2}, {1, 2, 1, 2}});
  EXPECT_TRUE(a.same_code(b));
  EXPECT_THROW(LinearCode(3, 4, {{1, 2, 3, 0}}), Error);
  EXPECT_THROW(LinearCode(3, 4, {{1, 2}}), Error);
  EXPECT_THROW(LinearCode(4, 2, {{1, 1}}), Error);
}

TEST(Codes, BinaryDualBch) {
  const auto built = dual_bch_with_allone(2, 4, 5);
  EXPECT_EQ(built.code.length(), 31u);
  EXPECT_EQ(built.code.dimension(), 11u);
  EXPECT_EQ(built.expected_dimension, 11u);
  EXPECT_TRUE(built.dimension_guaranteed);
  EXPECT_EQ(min_distance_exhaustive(built.code), 11u);
  EXPECT_EQ(distance_bound_dual_bch(2, 4, 5), 11);
}

TEST(Codes, TernaryDualBch) {
  const auto built = dual_bch_with_allone(3, 3, 3);
  EXPECT_EQ(built.code.length(), 26u);
  EXPECT_EQ(built.code.dimension(), 7u);
  EXPECT_EQ(built.expected_dimension, 7u);
  EXPECT_FALSE(built.dimension_guaranteed);
  EXPECT_EQ(min_distance_exhaustive(built.code), 14u);
  EXPECT_EQ(distance_bound_dual_bch(3, 3, 3), 14);
  EXPECT_THROW(dual_bch_with_allone(3, 26, 3), Error);
  EXPECT_THROW(dual_bch_with_allone(3, 0, 3), Error);
}

TEST(Codes, DualBchBounds) {
  EXPECT_EQ(distance_bound_dual_bch(2, 6, 7), 47);
  EXPECT_THROW(distance_bound_dual_bch(2, 1, 5), Error);  // genus 0
  EXPECT_THROW(distance_bound_dual_bch(2, 4, 4), Error);
}

TEST(Codes, GoppaDualOverF125) {
  const auto F = make_field(5, 3);
  EXPECT_EQ(default_goppa_polynomial(*F, 2), Polynomial::from_terms(*F, {{2, 1}, {0, 2}}));
  const auto built = goppa_dual(F, 2);
  EXPECT_EQ(built.code.length(), 125u);
  EXPECT_EQ(built.code.dimension(), 7u);
  EXPECT_EQ(built.expected_dimension, 7u);
  EXPECT_TRUE(built.dimension_guaranteed);
  EXPECT_EQ(min_distance_exhaustive(built.code), 90u);
  EXPECT_EQ(zero_count_distance_bound(5, 3, 3), 83);
}

TEST(Codes, GoppaInverseTwist) {
  const auto F = make_field(5, 3);
  const auto g = default_goppa_polynomial(*F, 2);
  std::vector<Code> points(F->size()), twist(F->size());
  for (Code x = 0; x < F->size(); ++x) {
    points[x] = x;
    twist[x] = F->inv(g.evaluate(*F, x));
  }
  const std::vector<std::uint64_t> exps{0, 1};
  const auto code = build_trace_code(*F, points, basis_monomials(*F, exps), true, twist);
  EXPECT_EQ(code.dimension(), 7u);
  EXPECT_EQ(min_distance_exhaustive(code), 87u);
}

TEST(Codes, GoppaBounds) {
  EXPECT_EQ(distance_bound_goppa_dual(5, 3, 3), 95);
  try {
    distance_bound_goppa_dual(5, 3, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
    EXPECT_NE(std::string(e.what()).find("genus is 0"), std::string::npos);
  }
  EXPECT_THROW(goppa_dual(5, 3, 5), Error);  // p | t
  const auto F = make_field(5, 3);
  EXPECT_THROW(goppa_dual(F, 2, Polynomial::from_terms(*F, {{2, 1}, {0, 4}})), Error);  // x^2 - 1
}

TEST(Codes, QuinticTraceCodeOverF128) {
  const auto F = make_field(2, 7);
  std::vector<Code> points(F->size());
  std::iota(points.begin(), points.end(), Code{0});
  const std::vector<std::uint64_t> exps{1, 3, 5};
  const auto code = build_trace_code(*F, points, basis_monomials(*F, exps), true);
  EXPECT_EQ(code.dimension(), 22u);
  EXPECT_EQ(min_distance_exhaustive(code), 48u);
  EXPECT_EQ(zero_count_distance_bound(2, 7, 5), 48);
}

TEST(Codes, TraceCodeOverF32Bounds) {
  EXPECT_EQ(zero_count_distance_bound(2, 5, 3), 12);
  const auto F = make_field(2, 5);
  std::vector<Code> points(32);
  std::iota(points.begin(), points.end(), Code{0});
  const std::vector<std::uint64_t> exps{1, 3};
  const auto code = build_trace_code(*F, points, basis_monomials(*F, exps), true);
  EXPECT_GE(min_distance_exhaustive(code), 12u);
}

TEST(Codes, MinimumDistanceMatchesBruteForce) {
  std::mt19937_64 rng(2024);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 15; ++trial) {
      const std::size_t len = 4 + rng() % 12, rows = 1 + rng() % (p == 2 ? 8 : 4);
      std::vector<CodeRow> gen(rows, CodeRow(len));
      for (auto& r : gen)
        for (auto& v : r) v = static_cast<std::uint8_t>(rng() % p);
      const LinearCode code(p, len, gen);
      if (code.dimension() == 0) continue;
      EXPECT_EQ(min_distance_exhaustive(code), oracle::min_distance_brute(code.basis(), p));
    }
  }
}

TEST(Codes, WeightDistributionIsThreadInvariant) {
  const auto built = dual_bch_with_allone(2, 6, 7);
  DistanceOptions one, many;
  many.threads = 3;
  const auto a = weight_distribution(built.code, one);
  const auto b = weight_distribution(built.code, many);
  EXPECT_EQ(a, b);
  EXPECT_EQ(std::accumulate(a.begin(), a.end(), std::uint64_t{0}),
            std::uint64_t{1} << built.code.dimension());
  EXPECT_EQ(a[0], 1u);
  std::size_t first = 1;
  while (a[first] == 0) ++first;
  EXPECT_EQ(first, min_distance_exhaustive(built.code, many));
  EXPECT_GE(first, 47u);
}

TEST(Codes, CodewordBudget) {
  const auto built = dual_bch_with_allone(2, 6, 7);
  DistanceOptions small;
  small.max_codewords = 1000;
  EXPECT_THROW(min_distance_exhaustive(built.code, small), CapacityError);
}

TEST(Codes, InvalidPointSets) {
  const auto F = make_field(2, 3);
  const std::vector<Code> dup{1, 2, 2};
  const std::vector<Polynomial> gens{Polynomial::monomial(1, 1)};
  EXPECT_THROW(build_trace_code(*F, dup, gens, false), Error);
  const std::vector<Code> outside{1, 9};
  EXPECT_THROW(build_trace_code(*F, outside, gens, false), Error);
}
