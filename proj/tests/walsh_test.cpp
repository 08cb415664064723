#include <gtest/gtest.h>

#include <random>

#include "ascurve/errors.hpp"
#include "ascurve/walsh.hpp"
#include "oracles.hpp"

using namespace ascurve;

namespace {

Polynomial poly(const FiniteField& F, std::vector<Term> terms) {
  return Polynomial::from_terms(F, std::move(terms));
}

}  // namespace

TEST(Walsh, LinearFunction) {
  const auto F = make_field(2, 5);
  const auto s = walsh_spectrum(*F, poly(*F, {{1, 1}}));
  for (Code a = 1; a < 32; ++a)
    for (Code b = 0; b < 32; ++b) EXPECT_EQ(s.at(a, b), b == a ? 32 : 0);
  EXPECT_EQ(nonlinearity(s), 0u);
}

TEST(Walsh, ParsevalHolds) {
  const auto F = make_field(2, 6);
  const auto s = walsh_spectrum(*F, poly(*F, {{5, 3}, {3, 1}, {2, 9}}));
  for (Code a = 1; a < 64; ++a) {
    std::int64_t sum = 0;
    for (Code b = 0; b < 64; ++b) sum += s.at(a, b) * s.at(a, b);
    EXPECT_EQ(sum, 64 * 64);
  }
}

TEST(Walsh, CubeSpectra) {
  const auto F5 = make_field(2, 5);
  const auto s5 = walsh_spectrum(*F5, poly(*F5, {{3, 1}}));
  EXPECT_EQ(s5.max_abs, 8u);
  EXPECT_EQ(nonlinearity(s5), 12u);
  const auto F7 = make_field(2, 7);
  EXPECT_EQ(nonlinearity(*F7, poly(*F7, {{3, 1}})), 56u);
}

TEST(Walsh, FastTransformMatchesDirectSum) {
  std::mt19937_64 rng(8);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto F = make_field(2, n);
    const oracle::SchoolField S(2, n);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Term> terms;
      oracle::Terms oterms;
      for (std::uint64_t e = 0; e <= 6; ++e) {
        const Code c = rng() % F->size();
        terms.push_back({e, c});
        oterms.emplace_back(e, c);
      }
      const auto s = walsh_spectrum(*F, poly(*F, terms));
      for (Code a = 1; a < F->size(); ++a)
        for (Code b = 0; b < F->size(); ++b)
          EXPECT_EQ(s.at(a, b), oracle::walsh_direct(S, oterms, a, b));
    }
  }
}

TEST(Walsh, DivisibilityOverF32) {
  const auto F = make_field(2, 5);
  for (std::uint64_t m : {3u, 5u}) {
    const std::uint64_t e = walsh_divisibility_exponent(5, m);
    for (Code a = 0; a < 32; ++a)
      for (Code b = 0; b < (m == 5 ? 32u : 1u); ++b) {
        const auto f = m == 5 ? poly(*F, {{5, 1}, {3, a}, {1, b}}) : poly(*F, {{3, 1}, {1, a}});
        const auto s = walsh_spectrum(*F, f);
        ASSERT_TRUE(s.min_two_adic);
        EXPECT_GE(*s.min_two_adic, e);
        EXPECT_LE(s.max_abs, 32u / 2);
      }
  }
  EXPECT_EQ(walsh_divisibility_exponent(5, 3), 3u);
  EXPECT_EQ(walsh_divisibility_exponent(5, 5), 3u);
  EXPECT_EQ(walsh_divisibility_exponent(7, 5), 4u);
}

TEST(Walsh, NonlinearityBounds) {
  EXPECT_EQ(nl_upper_bound(5), 12u);
  EXPECT_EQ(nl_upper_bound(7), 56u);
  EXPECT_EQ(nl_lower_bound_from_theorem(5, 3), 12u);
  EXPECT_EQ(nl_lower_bound_from_theorem(7, 3), 56u);
  EXPECT_EQ(nl_lower_bound_from_theorem(7, 5), 48u);
  EXPECT_THROW(nl_upper_bound(6), Error);
  EXPECT_THROW(nl_lower_bound_from_theorem(7, 4), Error);
}

TEST(Walsh, RandomQuinticsRespectBounds) {
  std::mt19937_64 rng(123);
  const auto F = make_field(2, 7);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term> terms{{5, 1 + rng() % 127}, {3, rng() % 128}, {1, rng() % 128}};
    const auto s = walsh_spectrum(*F, poly(*F, terms));
    EXPECT_LE(s.max_abs, 32u);
    EXPECT_GE(nonlinearity(s), nl_lower_bound_from_theorem(7, 5));
    EXPECT_LE(nonlinearity(s), nl_upper_bound(7));
  }
}

TEST(Walsh, OddCharacteristicRejected) {
  const auto F = make_field(3, 2);
  EXPECT_THROW(walsh_spectrum(*F, poly(*F, {{1, 1}})), Error);
}
