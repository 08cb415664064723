#pragma once

// Finite fields F_{p^n} in a power basis, towers F_{q^i} over them, traces,
// Frobenius and canonical element enumeration.
//
// Every element is addressed by its canonical integer encoding (`Code`):
// the little-endian base-p digits of its coordinates.  For a field built
// directly over F_p the digits are the coefficients of the residue
// polynomial; for a tower K[y]/(h) with |K| = Q the code is
// sum_j c_j * Q^j where c_j is the code of the j-th coordinate in K.
// Base elements therefore embed with an unchanged code.

#include <cstdint>
#include <memory>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "ascurve/errors.hpp"

namespace ascurve {

using Code = std::uint64_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

class FiniteField {
  struct Token {
    explicit Token() = default;
  };

 public:
  /// The prime field F_p.
  static FieldPtr prime(std::uint32_t p);

  /// F_p[x]/(modulus).  `modulus` is ascending, monic and must be
  /// irreducible over F_p; violations raise a precondition error.
  static FieldPtr over_prime(std::uint32_t p, std::vector<Code> modulus);

  /// base[y]/(modulus) with modulus coefficients given as base codes.
  static FieldPtr extension(FieldPtr base, std::vector<Code> modulus);

  FiniteField(Token, std::uint32_t p, FieldPtr base, std::vector<Code> modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  /// Degree over the immediate base (1 for the prime field).
  unsigned degree() const noexcept { return degree_; }
  /// Degree over F_p.
  unsigned absolute_degree() const noexcept { return abs_degree_; }
  Code size() const noexcept { return size_; }
  Code base_size() const noexcept { return base_size_; }
  bool is_prime_field() const noexcept { return base_ == nullptr; }
  const FieldPtr& base() const noexcept { return base_; }
  /// Ascending modulus coefficients (base codes), monic.
  std::span<const Code> modulus() const noexcept { return modulus_; }
  bool contains(Code x) const noexcept { return x < size_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  /// Inverse by the extended Euclidean algorithm; zero raises division_by_zero.
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t exponent) const;

  /// a^(p^k).
  Code frobenius(Code a, std::uint64_t k = 1) const;

  /// Absolute trace to F_p, read from a precomputed linear functional.
  std::uint32_t trace(Code a) const;

  /// Absolute trace as the explicit orbit sum a + a^p + ... + a^(p^(N-1)).
  Code trace_by_orbit(Code a) const;

  /// Coordinates over the immediate base (length degree()).
  std::vector<Code> coordinates(Code a) const;
  Code from_coordinates(std::span<const Code> coords) const;

  /// Base-p digits (length absolute_degree()).
  std::vector<std::uint32_t> digits(Code a) const;

  /// Structural equality: same characteristic, same tower, same moduli.
  bool same_field(const FiniteField& other) const;

  /// Human-readable description, e.g. "F_2^5" or "F_(2^5)^2".
  std::string describe() const;

 private:
  Code mul_binary(Code a, Code b) const;
  Code mul_generic(Code a, Code b) const;

  std::uint32_t p_;
  FieldPtr base_;
  std::vector<Code> modulus_;
  unsigned degree_;
  unsigned abs_degree_;
  Code base_size_;
  Code size_;
  bool binary_;  // p = 2 directly over F_2: codes are bit polynomials
  Code modulus_bits_ = 0;
  Code trace_mask_ = 0;                     // binary trace functional
  std::vector<std::uint32_t> trace_digits_;  // trace of each digit basis element
};

/// Monic polynomial over `K` (ascending codes) is irreducible, decided by
/// x^(Q^d) = x mod f and gcd(x^(Q^(d/l)) - x, f) = 1 for primes l | d.
bool is_irreducible(const FiniteField& K, std::span<const Code> monic);

/// Smallest-encoding monic irreducible of degree d over K, where a monic
/// polynomial is ordered by sum_i c_i * |K|^i over its lower coefficients.
std::vector<Code> smallest_irreducible(const FiniteField& K, unsigned degree);

/// Smallest-encoding monic irreducible of degree n over F_p.
std::vector<Code> find_irreducible(std::uint32_t p, unsigned n);

/// F_{p^n} with the deterministic modulus from find_irreducible.
FieldPtr make_field(std::uint32_t p, unsigned n);

/// F_{q^i} as a tower over `base` with the smallest-encoding modulus.
FieldPtr extend_field(const FieldPtr& base, unsigned degree);

/// All elements in ascending code order.  Throws CapacityError when the
/// field is larger than `budget`.
inline auto enumerate(const FiniteField& field,
                      std::uint64_t budget = kDefaultEnumerationBudget) {
  if (field.size() > budget)
    throw CapacityError("enumerating " + field.describe(), BigInt(field.size()),
                        BigInt(budget));
  return std::views::iota(Code{0}, field.size());
}

/// Wire form of a field built directly over F_p.
struct FieldSpec {
  std::uint32_t p = 2;
  unsigned n = 1;
  std::vector<Code> modulus;  // ascending, length n + 1, monic
};

FieldSpec spec_of(const FiniteField& field);
FieldPtr make_field(const FieldSpec& spec);

/// Value type pairing an element with its owning field.  Mixing owners is
/// a usage error.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Code code);

  static FieldElement zero(FieldPtr field) { return {std::move(field), 0}; }
  static FieldElement one(FieldPtr field) { return {std::move(field), 1}; }

  const FieldPtr& field() const noexcept { return field_; }
  Code code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;

  FieldElement pow(std::uint64_t exponent) const;
  FieldElement frobenius(std::uint64_t k = 1) const;
  FieldElement inverse() const;
  std::uint32_t trace() const { return field_->trace(code_); }

  bool operator==(const FieldElement& rhs) const;

 private:
  const FiniteField& common(const FieldElement& rhs) const;

  FieldPtr field_;
  Code code_;
};

}  // namespace ascurve
