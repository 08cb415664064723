#include <gtest/gtest.h>

#include <random>

#include "ascurve/errors.hpp"
#include "ascurve/polynomial.hpp"

using namespace ascurve;

TEST(Polynomial, ParseAndFormat) {
  const auto F = make_field(5, 3);
  const auto f = parse_polynomial(*F, " 3*x^5 + x^2 + 7*x + 1 + x^2 ");
  EXPECT_EQ(f.degree(), 5);
  EXPECT_EQ(f.coefficient(2), F->add(1, 1));
  EXPECT_EQ(f.coefficient(1), 7u);
  EXPECT_EQ(f.coefficient(0), 1u);
  EXPECT_EQ(parse_polynomial(*F, format_polynomial(f)), f);
}

TEST(Polynomial, MalformedInputIsParseError) {
  const auto F = make_field(2, 3);
  for (const char* bad : {"", "x^", "3*", "x^2++x", "y", "2x", "x^-1"}) {
    try {
      parse_polynomial(*F, bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::parse) << bad;
    }
  }
  // coefficient outside F_8
  EXPECT_THROW(parse_polynomial(*F, "9*x"), Error);
}

TEST(Polynomial, MergingCancelsTerms) {
  const auto F = make_field(2, 4);
  const auto f = Polynomial::from_terms(*F, {{3, 5}, {1, 1}, {3, 5}});
  EXPECT_EQ(f.degree(), 1);
  EXPECT_TRUE(Polynomial::from_terms(*F, {{2, 7}, {2, 7}}).is_zero());
}

TEST(Polynomial, EvaluatorAgreesWithDirectEvaluation) {
  std::mt19937_64 rng(11);
  const auto F = make_field(3, 5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Term> terms;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) terms.push_back({rng() % 5000, rng() % F->size()});
    const auto f = Polynomial::from_terms(*F, terms);
    const PolynomialEvaluator eval(*F, f);
    for (int i = 0; i < 50; ++i) {
      const Code x = rng() % F->size();
      EXPECT_EQ(eval(x), f.evaluate(*F, x));
    }
  }
}
