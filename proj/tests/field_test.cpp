#include <gtest/gtest.h>

#include <random>

#include "ascurve/errors.hpp"
#include "ascurve/field.hpp"
#include "oracles.hpp"

using namespace ascurve;

TEST(Field, SmallestModuliAreFrozen) {
  EXPECT_EQ(find_irreducible(2, 7), (std::vector<Code>{1, 1, 0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(find_irreducible(5, 3), (std::vector<Code>{1, 1, 0, 1}));
  EXPECT_EQ(find_irreducible(2, 3), (std::vector<Code>{1, 1, 0, 1}));
  EXPECT_EQ(find_irreducible(2, 5), (std::vector<Code>{1, 0, 1, 0, 0, 1}));
}

TEST(Field, SmallestModulusMatchesTrialDivision) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 2}, {2, 4}, {2, 6}, {2, 8}, {3, 2}, {3, 4}, {5, 2}, {7, 3}, {11, 2}}) {
    const auto expected = oracle::smallest_irreducible_by_trial(p, n);
    const auto actual = find_irreducible(p, n);
    ASSERT_EQ(actual.size(), expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i) EXPECT_EQ(actual[i], expected[i]) << p << "^" << n;
  }
}

TEST(Field, IrreducibilityAgreesWithTrialDivision) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto Fp = FiniteField::prime(p);
    for (unsigned d = 1; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p;
      for (std::uint64_t code = 0; code < count; ++code) {
        std::vector<Code> f(d + 1, 0);
        oracle::Digits g(d + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 0; i < d; ++i, c /= p) f[i] = g[i] = static_cast<std::uint32_t>(c % p);
        f[d] = g[d] = 1;
        EXPECT_EQ(is_irreducible(*Fp, f), oracle::is_irreducible_by_trial(g, p));
      }
    }
  }
}

TEST(Field, F8Arithmetic) {
  const auto F = make_field(2, 3);
  EXPECT_EQ(F->mul(5, 6), 3u);
  EXPECT_EQ(F->mul(3, 7), 2u);
  EXPECT_EQ(F->frobenius(3, 1), 5u);
  EXPECT_EQ(F->frobenius(6, 1), 2u);
  EXPECT_EQ(F->frobenius(3, 2), 7u);
  const std::vector<std::uint32_t> traces{0, 1, 0, 1, 0, 1, 0, 1};
  for (Code a = 0; a < 8; ++a) EXPECT_EQ(F->trace(a), traces[a]) << a;
}

TEST(Field, ArithmeticMatchesSchoolbook) {
  std::mt19937_64 rng(7);
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{
           {2, 5}, {2, 11}, {3, 3}, {3, 7}, {5, 2}, {7, 3}, {13, 2}}) {
    const auto F = make_field(p, n);
    const oracle::SchoolField S(p, n);
    for (int i = 0; i < 300; ++i) {
      const Code a = rng() % F->size(), b = rng() % F->size();
      EXPECT_EQ(F->add(a, b), S.add(a, b));
      EXPECT_EQ(F->mul(a, b), S.mul(a, b));
      EXPECT_EQ(F->trace(a), S.trace(a));
      EXPECT_EQ(F->frobenius(a, 1), S.pow(a, p));
    }
  }
}

TEST(Field, InverseAndDivision) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {3, 5}, {101, 1}}) {
    const auto F = make_field(p, n);
    for (Code a = 1; a < std::min<Code>(F->size(), 500); ++a) {
      EXPECT_EQ(F->mul(a, F->inv(a)), 1u);
      EXPECT_EQ(F->div(a, a), 1u);
    }
    try {
      F->inv(0);
      FAIL() << "inverse of zero";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::division_by_zero);
    }
  }
}

TEST(Field, TowerAxiomsAndFrobenius) {
  const auto base = make_field(2, 2);
  const auto T = extend_field(base, 3);
  EXPECT_EQ(T->size(), 64u);
  EXPECT_EQ(T->absolute_degree(), 6u);
  EXPECT_EQ(T->describe(), "F_(2^2)^3");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Code a = rng() % 64, b = rng() % 64, c = rng() % 64;
    EXPECT_EQ(T->mul(a, T->add(b, c)), T->add(T->mul(a, b), T->mul(a, c)));
    EXPECT_EQ(T->frobenius(a, 6), a);
    EXPECT_EQ(T->trace(a), T->trace_by_orbit(a));
    EXPECT_LT(T->trace(a), 2u);
    if (a != 0) {
      EXPECT_EQ(T->mul(a, T->inv(a)), 1u);
    }
  }
  // base codes embed unchanged
  for (Code a = 0; a < 4; ++a)
    for (Code b = 0; b < 4; ++b) EXPECT_EQ(T->mul(a, b), base->mul(a, b));
}

TEST(Field, TraceIsLinearAndBalanced) {
  const auto F = make_field(3, 4);
  std::vector<std::uint64_t> counts(3, 0);
  for (Code a : enumerate(*F)) ++counts[F->trace(a)];
  EXPECT_EQ(counts, (std::vector<std::uint64_t>{27, 27, 27}));
}

TEST(Field, RejectsReducibleModulus) {
  try {
    FiniteField::over_prime(2, {1, 0, 1});  // (x + 1)^2
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::precondition);
  }
  EXPECT_THROW(FiniteField::prime(4), Error);
}

TEST(Field, EnumerationBudget) {
  const auto F = make_field(2, 10);
  try {
    enumerate(*F, 1000);
    FAIL();
  } catch (const CapacityError& e) {
    EXPECT_EQ(e.code(), ErrorCode::capacity_exceeded);
    EXPECT_EQ(e.required(), 1024);
    EXPECT_EQ(e.budget(), 1000);
  }
}

TEST(Field, ElementsFromDifferentFieldsDoNotMix) {
  const auto F = make_field(2, 3), G = make_field(2, 4);
  const FieldElement a(F, 3), b(G, 3);
  try {
    (void)(a + b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::usage);
  }
  EXPECT_EQ((a * a).code(), F->mul(3, 3));
  EXPECT_THROW(FieldElement(F, 8), Error);
}

TEST(Field, SpecRoundTrip) {
  const auto F = make_field(5, 3);
  const auto spec = spec_of(*F);
  EXPECT_EQ(spec.modulus, (std::vector<Code>{1, 1, 0, 1}));
  EXPECT_TRUE(make_field(spec)->same_field(*F));
}
