#include "ascurve/counting.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <functional>
#include <numbers>

#include "parallel.hpp"

namespace ascurve {

Polynomial reduce_trace_form(const FiniteField& field, const Polynomial& f) {
  const std::uint32_t p = field.characteristic();
  const unsigned root_power = field.absolute_degree() - 1;  // c -> c^(p^(N-1)) inverts Frobenius
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (Term t : f.terms()) {
    while (t.exponent != 0 && t.exponent % p == 0) {
      t.exponent /= p;
      t.coeff = field.frobenius(t.coeff, root_power);
    }
    out.push_back(t);
  }
  return Polynomial::from_terms(field, std::move(out));
}

CurveInstance::CurveInstance(FieldPtr field, const Polynomial& f)
    : field_(std::move(field)), original_(f) {
  if (!field_) fail(ErrorCode::usage, "curve without a field");
  f_ = reduce_trace_form(*field_, original_);
}

std::optional<std::uint64_t> CurveInstance::genus() const {
  const std::int64_t m = degree();
  if (m < 1) return std::nullopt;
  const std::uint64_t twice = static_cast<std::uint64_t>(m - 1) * (field_->characteristic() - 1);
  if (twice % 2 != 0) return std::nullopt;
  return twice / 2;
}

bool CurveInstance::has_coprime_degree() const {
  const std::int64_t m = degree();
  return m >= 1 && gcd_u64(static_cast<std::uint64_t>(m), field_->characteristic()) == 1;
}

std::uint64_t count_trace_zeros(const FiniteField& field, const Polynomial& f,
                                const EnumOptions& opts) {
  const auto elements = enumerate(field, opts.max_elements);
  const PolynomialEvaluator eval(field, f);
  return detail::partitioned<std::uint64_t>(
      elements.front(), elements.back() + 1, opts.threads, 0,
      [&](Code lo, Code hi) {
        std::uint64_t zeros = 0;
        for (Code x = lo; x < hi; ++x)
          if (field.trace(eval(x)) == 0) ++zeros;
        return zeros;
      },
      [](std::uint64_t a, std::uint64_t b) { return a + b; });
}

std::uint64_t count_trace_zeros(const CurveInstance& curve, const EnumOptions& opts) {
  return count_trace_zeros(*curve.field(), curve.f(), opts);
}

BigInt count_curve_points(const CurveInstance& curve, unsigned extension_degree,
                          const EnumOptions& opts) {
  require(extension_degree >= 1, "extension degree must be >= 1");
  const FiniteField& base = *curve.field();
  const BigInt size = ipow(BigInt(base.size()), extension_degree);
  if (size > opts.max_elements)
    throw CapacityError("counting points over F_q^" + std::to_string(extension_degree), size,
                        BigInt(opts.max_elements));
  // base codes embed unchanged into the tower, so f needs no translation
  const FieldPtr field = extension_degree == 1 ? curve.field()
                                              : extend_field(curve.field(), extension_degree);
  const std::uint64_t zeros = count_trace_zeros(*field, curve.f(), opts);
  return 1 + BigInt(base.characteristic()) * zeros;
}

std::uint64_t TraceDistribution::total() const {
  std::uint64_t sum = 0;
  for (auto c : counts) sum += c;
  return sum;
}

TraceDistribution trace_value_distribution(const CurveInstance& curve, Code beta,
                                           const EnumOptions& opts) {
  const FiniteField& field = *curve.field();
  if (beta == 0) fail(ErrorCode::precondition, "beta must be nonzero");
  if (!field.contains(beta)) fail(ErrorCode::usage, "beta is not an element of " + field.describe());
  const auto elements = enumerate(field, opts.max_elements);
  const Polynomial twisted = reduce_trace_form(field, curve.original().scaled(field, beta));
  const PolynomialEvaluator eval(field, twisted);
  const std::uint32_t p = field.characteristic();

  using Counts = std::vector<std::uint64_t>;
  TraceDistribution dist;
  dist.beta = beta;
  dist.counts = detail::partitioned<Counts>(
      elements.front(), elements.back() + 1, opts.threads, Counts(p, 0),
      [&](Code lo, Code hi) {
        Counts local(p, 0);
        for (Code x = lo; x < hi; ++x) ++local[field.trace(eval(x))];
        return local;
      },
      [](Counts a, const Counts& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return a;
      });
  return dist;
}

Code smallest_element_with_trace(const FiniteField& field, std::uint32_t a) {
  require(a < field.characteristic(), "trace value must lie in F_p");
  for (Code x = 0; x < field.size(); ++x)
    if (field.trace(x) == a) return x;
  fail(ErrorCode::precondition, "no element with trace " + std::to_string(a));
}

CharacterSum char_sum(const CurveInstance& curve, Code beta, const EnumOptions& opts) {
  const FiniteField& field = *curve.field();
  const TraceDistribution dist = trace_value_distribution(curve, beta, opts);
  CharacterSum sum;
  sum.p = field.characteristic();
  sum.q = field.size();
  sum.coefficients = dist.counts;
  sum.is_zero = std::adjacent_find(dist.counts.begin(), dist.counts.end(),
                                   std::not_equal_to<>()) == dist.counts.end();
  if (sum.p == 2) {
    const auto a = dist.counts[0], b = dist.counts[1];
    sum.exact_magnitude = a > b ? a - b : b - a;
    sum.magnitude = static_cast<double>(*sum.exact_magnitude);
    return sum;
  }
  long double re = 0, im = 0;
  for (std::uint32_t a = 0; a < sum.p; ++a) {
    const long double angle = 2 * std::numbers::pi_v<long double> * a / sum.p;
    re += static_cast<long double>(dist.counts[a]) * std::cos(angle);
    im += static_cast<long double>(dist.counts[a]) * std::sin(angle);
  }
  sum.magnitude = static_cast<double>(std::sqrt(re * re + im * im));
  if (sum.is_zero) sum.magnitude = 0.0;
  // each of the 2p products carries relative error ~ LDBL_EPSILON, then one
  // rounding to double
  sum.magnitude_error = 4.0 * sum.p * static_cast<double>(sum.q) * LDBL_EPSILON +
                        sum.magnitude * DBL_EPSILON;
  return sum;
}

}  // namespace ascurve
