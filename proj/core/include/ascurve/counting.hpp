#pragma once

// Exhaustive counting on Artin-Schreier curves y^p - y = f(x).

#include <cstdint>
#include <optional>
#include <vector>

#include "ascurve/field.hpp"
#include "ascurve/polynomial.hpp"

namespace ascurve {

struct EnumOptions {
  std::uint64_t max_elements = kDefaultEnumerationBudget;
  /// Upper bound on the number of encoding-range partitions.
  unsigned threads = 1;
};

/// Replaces every term c*x^(p*j) by c^(p^(N-1))*x^j until no exponent is
/// divisible by p, merging like terms; the constant term is kept.  The
/// result has the same absolute trace as f at every point.
Polynomial reduce_trace_form(const FiniteField& field, const Polynomial& f);

/// The curve y^p - y = f(x) over F_q, stored with f in reduced trace form.
class CurveInstance {
 public:
  CurveInstance(FieldPtr field, const Polynomial& f);

  const FieldPtr& field() const noexcept { return field_; }
  /// Reduced form actually used for counting.
  const Polynomial& f() const noexcept { return f_; }
  const Polynomial& original() const noexcept { return original_; }

  /// Degree m of the reduced form; 0 for constants, -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return f_.degree(); }

  /// (m - 1)(p - 1)/2, or nullopt for constant f (m < 1).
  std::optional<std::uint64_t> genus() const;

  /// deg >= 1 with gcd(m, p) = 1 (always true after reduction when m >= 1).
  bool has_coprime_degree() const;

 private:
  FieldPtr field_;
  Polynomial original_;
  Polynomial f_;
};

/// #{x in field : Tr(f(x)) = 0} by exhaustive evaluation.
std::uint64_t count_trace_zeros(const FiniteField& field, const Polynomial& f,
                                const EnumOptions& opts = {});

/// |Z_f| for the curve's f over F_q.
std::uint64_t count_trace_zeros(const CurveInstance& curve, const EnumOptions& opts = {});

/// N_f(i) = 1 + p * #{x in F_{q^i} : Tr(f(x)) = 0}; the F_{q^i} tower is
/// built with extend_field for i > 1.
BigInt count_curve_points(const CurveInstance& curve, unsigned extension_degree,
                          const EnumOptions& opts = {});

struct TraceDistribution {
  Code beta = 1;
  /// counts[a] = #{x : Tr(beta * f(x)) = a}, a in F_p.
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
};

TraceDistribution trace_value_distribution(const CurveInstance& curve, Code beta,
                                           const EnumOptions& opts = {});

/// Smallest-encoding element of the field with absolute trace a.
Code smallest_element_with_trace(const FiniteField& field, std::uint32_t a);

/// sum_a M(a) * zeta_p^a, kept as the exact count vector, with its complex
/// magnitude |sum_x chi_beta(f(x))| derived in floating point.
struct CharacterSum {
  std::uint32_t p = 2;
  Code q = 0;
  std::vector<std::uint64_t> coefficients;  // coefficient of zeta_p^a
  /// Exact: the sum vanishes iff every coefficient is equal.
  bool is_zero = false;
  double magnitude = 0.0;
  /// Absolute error bound on `magnitude` (0 when p = 2, where it is exact).
  double magnitude_error = 0.0;
  /// |M(0) - M(1)| for p = 2.
  std::optional<std::uint64_t> exact_magnitude;

  /// |E| = magnitude / q.
  double expectation_magnitude() const { return magnitude / static_cast<double>(q); }
};

CharacterSum char_sum(const CurveInstance& curve, Code beta, const EnumOptions& opts = {});

}  // namespace ascurve
