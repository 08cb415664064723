#pragma once

// Trace codes Tr_P(V) over F_p, the duals of primitive BCH and classical
// Goppa codes in their trace representation, exhaustive minimum distance,
// and the associated distance bounds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ascurve/bigint.hpp"
#include "ascurve/field.hpp"
#include "ascurve/polynomial.hpp"

namespace ascurve {

inline constexpr std::uint64_t kDefaultCodewordBudget = std::uint64_t{1} << 24;

using CodeRow = std::vector<std::uint8_t>;

struct DistanceInfo {
  std::uint64_t value = 0;
  bool exact = false;
  std::string provenance;
};

class LinearCode {
 public:
  /// Generator rows of residues mod p (p < 256); dimension is their rank.
  LinearCode(std::uint32_t p, std::size_t length, std::vector<CodeRow> rows);

  std::uint32_t p() const noexcept { return p_; }
  std::size_t length() const noexcept { return length_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<CodeRow>& rows() const noexcept { return rows_; }
  /// Reduced row-echelon basis of the row space.
  const std::vector<CodeRow>& basis() const noexcept { return basis_; }

  /// Same row space (compares reduced echelon forms).
  bool same_code(const LinearCode& other) const;

  std::optional<DistanceInfo> distance;

 private:
  std::uint32_t p_;
  std::size_t length_;
  std::vector<CodeRow> rows_;
  std::vector<CodeRow> basis_;
};

/// {gamma_i x^j}: gamma_i runs over the F_p-basis of the field (codes p^i)
/// and j over `exponents`.
std::vector<Polynomial> basis_monomials(const FiniteField& field,
                                        std::span<const std::uint64_t> exponents);

/// Rows Tr(twist_k * g(P_k)) for each generator g, optionally preceded by
/// the all-one row.  An empty twist means v_k = 1.
LinearCode build_trace_code(const FiniteField& field, std::span<const Code> points,
                            std::span<const Polynomial> generators, bool include_all_one,
                            std::span<const Code> twist = {});

struct ConstructedCode {
  LinearCode code;
  FieldPtr field;
  std::uint64_t expected_dimension = 0;
  /// Whether the parameters satisfy (p - 1) t < sqrt(q), the range in which
  /// the dimension formula is guaranteed.
  bool dimension_guaranteed = false;
  std::optional<Polynomial> goppa_polynomial;
};

/// C_p(t, n): the all-one vector plus Tr(gamma_i x^j), 1 <= j <= t, p !| j,
/// evaluated on the nonzero field elements in ascending code order.
/// Expected dimension 1 + n(t - floor(t/p)).  Requires 1 <= t < q - 1.
ConstructedCode dual_bch_with_allone(std::uint32_t p, unsigned t, unsigned n);
ConstructedCode dual_bch_with_allone(const FieldPtr& field, unsigned t);

/// Smallest-encoding monic degree-t polynomial over F_q with no root in F_q.
Polynomial default_goppa_polynomial(const FiniteField& field, unsigned t);

/// Dual of the classical Goppa code with L = F_q: the all-one vector plus
/// Tr(gamma_i * v * x^j), 0 <= j <= t - 1, v_k = goppa(alpha_k).  Expected
/// dimension 1 + n(t - floor((t - 1)/p)).  Requires gcd(t, p) = 1 and a
/// goppa polynomial of degree t without roots in F_q.
ConstructedCode goppa_dual(std::uint32_t p, unsigned n, unsigned t,
                           const std::optional<Polynomial>& goppa = std::nullopt);
ConstructedCode goppa_dual(const FieldPtr& field, unsigned t,
                           const std::optional<Polynomial>& goppa = std::nullopt);

struct DistanceOptions {
  std::uint64_t max_codewords = kDefaultCodewordBudget;
  unsigned threads = 1;
};

/// Minimum nonzero weight over all p^k codewords.  Binary codes are walked
/// in Gray-code order and odd p in odometer order, one row update per step.
std::uint64_t min_distance_exhaustive(const LinearCode& code, const DistanceOptions& opts = {});

/// Full weight distribution (index = weight), same enumeration engine.
std::vector<std::uint64_t> weight_distribution(const LinearCode& code,
                                               const DistanceOptions& opts = {});

/// Lower bound on d(BCH(t)^perp) and d(C_p(t, n)):
///   q - 1 - p^(n-1) - p^(ceil(n/g)-1) floor(g floor(2 sqrt q) / p^ceil(n/g))   (g > 1)
///   q - 1 - p^(n-1) - p^ceil((n-1)/2) floor(floor(2 sqrt q) / p^((n+1)/2))   (g = 1)
/// with g = (p-1)(t-1)/2 if p !| t, (p-1)(t-2)/2 if p | t.
BigInt distance_bound_dual_bch(std::uint64_t p, unsigned t, unsigned n);

/// Same shape with q - p^(n-1) in front and g = (p-1)(t-2)/2 if
/// p !| (t-1), (p-1)(t-3)/2 if p | (t-1).  g = 0 is rejected.
BigInt distance_bound_goppa_dual(std::uint64_t p, unsigned n, unsigned t);

/// q - q/p - max_{2 <= m' <= max_degree, gcd(m', p) = 1} main_bound(p, n, m'):
/// the bound for any trace code over all of F_q whose codewords are
/// Tr(f) + c with deg f <= max_degree.
BigInt zero_count_distance_bound(std::uint64_t p, unsigned n, std::uint64_t max_degree);

}  // namespace ascurve
