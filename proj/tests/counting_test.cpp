#include <gtest/gtest.h>

#include <random>

#include "ascurve/counting.hpp"
#include "ascurve/errors.hpp"
#include "oracles.hpp"

using namespace ascurve;

namespace {

Polynomial poly(const FiniteField& F, std::vector<Term> terms) {
  return Polynomial::from_terms(F, std::move(terms));
}

oracle::Terms as_terms(const Polynomial& f) {
  oracle::Terms out;
  for (const auto& t : f.terms()) out.emplace_back(t.exponent, t.coeff);
  return out;
}

}  // namespace

TEST(Counting, TraceKernelOfIdentity) {
  const auto F = make_field(2, 5);
  EXPECT_EQ(count_trace_zeros(*F, poly(*F, {{1, 1}})), 16u);
}

TEST(Counting, CubeOverF8) {
  const auto F = make_field(2, 3);
  EXPECT_EQ(count_trace_zeros(*F, poly(*F, {{3, 1}})), 4u);
}

TEST(Counting, CubeDistributionOverF32) {
  const auto F = make_field(2, 5);
  const CurveInstance c(F, poly(*F, {{3, 1}}));
  const auto d = trace_value_distribution(c, 1);
  EXPECT_EQ(d.counts, (std::vector<std::uint64_t>{16, 16}));
  EXPECT_EQ(d.total(), 32u);
  EXPECT_THROW(trace_value_distribution(c, 0), Error);
}

TEST(Counting, ReductionPreservesTraces) {
  std::mt19937_64 rng(5);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 6}, {3, 4}, {5, 3}}) {
    const auto F = make_field(p, n);
    std::vector<Term> terms;
    for (std::uint64_t e : std::vector<std::uint64_t>{p, std::uint64_t{p} * p, 4ULL * p * p, 1, 2ULL * p})
      terms.push_back({e, 1 + rng() % (F->size() - 1)});
    const auto f = poly(*F, terms);
    const auto r = reduce_trace_form(*F, f);
    for (const auto& t : r.terms()) EXPECT_TRUE(t.exponent == 0 || t.exponent % p != 0);
    for (Code x : enumerate(*F)) EXPECT_EQ(F->trace(f.evaluate(*F, x)), F->trace(r.evaluate(*F, x)));
  }
}

TEST(Counting, PointsMatchPairEnumeration) {
  struct Case {
    std::uint32_t p;
    unsigned n;
    std::vector<Term> f;
  };
  for (const auto& c : std::vector<Case>{{2, 5, {{5, 1}, {3, 1}, {1, 1}}},
                                         {2, 4, {{3, 1}, {2, 5}}},
                                         {3, 3, {{4, 2}, {1, 1}}},
                                         {5, 2, {{3, 1}, {2, 7}}},
                                         {7, 2, {{5, 1}}}}) {
    const auto F = make_field(c.p, c.n);
    const oracle::SchoolField S(c.p, c.n);
    const CurveInstance curve(F, poly(*F, c.f));
    EXPECT_EQ(count_curve_points(curve, 1), BigInt(oracle::curve_points_by_pairs(S, as_terms(curve.original()))));
  }
}

TEST(Counting, ExtensionCountsMatchLargerFieldOracle) {
  // N over F_{q^2} through the tower equals pair counting in F_{p^{2n}}
  const auto F = make_field(2, 3);
  const CurveInstance curve(F, poly(*F, {{3, 1}, {1, 1}}));
  const oracle::SchoolField S(2, 6);
  // x^3 + x has F_2 coefficients, so it reads the same in any model of F_64
  EXPECT_EQ(count_curve_points(curve, 2), BigInt(oracle::curve_points_by_pairs(S, {{3, 1}, {1, 1}})));
}

TEST(Counting, ThreadCountDoesNotChangeResults) {
  const auto F = make_field(2, 16);
  const auto f = poly(*F, {{7, 3}, {3, 1000}, {1, 17}});
  EnumOptions one, four;
  four.threads = 4;
  EXPECT_EQ(count_trace_zeros(*F, f, one), count_trace_zeros(*F, f, four));
}

TEST(Counting, CapacityBudgetIsEnforced) {
  const auto F = make_field(2, 12);
  EnumOptions small;
  small.max_elements = 1000;
  EXPECT_THROW(count_trace_zeros(*F, poly(*F, {{3, 1}}), small), CapacityError);
  const CurveInstance c(make_field(2, 5), poly(*make_field(2, 5), {{3, 1}}));
  EXPECT_THROW(count_curve_points(c, 3, small), CapacityError);
}

TEST(Counting, CharacterSumOverF2) {
  const auto F = make_field(2, 5);
  const CurveInstance c(F, poly(*F, {{3, 1}, {1, 1}}));
  const auto s = char_sum(c, 1);
  ASSERT_TRUE(s.exact_magnitude);
  const auto d = trace_value_distribution(c, 1);
  EXPECT_EQ(*s.exact_magnitude, d.counts[0] > d.counts[1] ? d.counts[0] - d.counts[1]
                                                          : d.counts[1] - d.counts[0]);
  EXPECT_DOUBLE_EQ(s.magnitude, static_cast<double>(*s.exact_magnitude));
}

TEST(Counting, CharacterSumOddCharacteristic) {
  const auto F = make_field(3, 3);
  const CurveInstance linear(F, poly(*F, {{1, 1}}));
  EXPECT_TRUE(char_sum(linear, 1).is_zero);
  const CurveInstance c(F, poly(*F, {{2, 1}}));
  const auto s = char_sum(c, 1);
  // quadratic Gauss sum: |S| = sqrt(q)
  EXPECT_NEAR(s.magnitude, std::sqrt(27.0), s.magnitude_error + 1e-9);
}

TEST(Counting, ShiftedZeroCountIdentity) {
  const auto F = make_field(3, 3);
  const CurveInstance c(F, poly(*F, {{5, 2}, {2, 1}, {3, 4}}));
  for (Code beta = 1; beta < F->size(); ++beta) {
    const auto d = trace_value_distribution(c, beta);
    for (std::uint32_t a = 0; a < 3; ++a) {
      const Code gamma = smallest_element_with_trace(*F, a);
      EXPECT_EQ(count_trace_zeros(*F, c.original().scaled(*F, beta).minus_constant(*F, gamma)),
                d.counts[a]);
    }
  }
}
