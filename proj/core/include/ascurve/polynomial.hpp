#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ascurve/field.hpp"

namespace ascurve {

struct Term {
  std::uint64_t exponent = 0;
  Code coeff = 0;

  bool operator==(const Term&) const = default;
};

/// Sparse univariate polynomial over a finite field.  Terms are kept in
/// ascending exponent order with nonzero coefficients; the field itself is
/// passed to every operation that needs arithmetic.
class Polynomial {
 public:
  Polynomial() = default;

  /// Merges like terms and drops zero coefficients.
  static Polynomial from_terms(const FiniteField& field, std::vector<Term> terms);
  static Polynomial monomial(Code coeff, std::uint64_t exponent);
  /// c_0 + c_1 x + ... from ascending dense coefficients.
  static Polynomial from_dense(std::span<const Code> coeffs);

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept {
    return terms_.empty() ? -1 : static_cast<std::int64_t>(terms_.back().exponent);
  }
  Code leading_coefficient() const noexcept { return terms_.empty() ? 0 : terms_.back().coeff; }
  Code coefficient(std::uint64_t exponent) const;

  Polynomial scaled(const FiniteField& field, Code c) const;
  Polynomial plus(const FiniteField& field, const Polynomial& other) const;
  Polynomial minus_constant(const FiniteField& field, Code c) const;

  /// Direct evaluation (one pow per term).
  Code evaluate(const FiniteField& field, Code x) const;

  bool operator==(const Polynomial&) const = default;

 private:
  std::vector<Term> terms_;
};

/// Precompiled evaluator: Horner over dense coefficients for moderate
/// degree, term-wise powers otherwise.
class PolynomialEvaluator {
 public:
  PolynomialEvaluator(const FiniteField& field, const Polynomial& f);
  Code operator()(Code x) const;

 private:
  const FiniteField* field_;
  Polynomial sparse_;
  std::vector<Code> dense_;  // empty when evaluating sparsely
};

/// Grammar: terms `c*x^e`, `c*x`, `x^e`, `x`, `c` joined by `+`, with
/// canonical-integer coefficients; whitespace is ignored.
Polynomial parse_polynomial(const FiniteField& field, std::string_view text);

std::string format_polynomial(const Polynomial& f);

}  // namespace ascurve
