#pragma once

// L-polynomials of Artin-Schreier curves from exhaustive point counts.
//
// Conventions: Z(T) = exp(sum_i N(i) T^i / i) = L(T) / ((1 - T)(1 - qT)),
// L(T) = sum_{i=0}^{2g} a_i T^i, and the functional equation reads
// a_{2g-i} = q^(g-i) a_i.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ascurve/bigint.hpp"
#include "ascurve/counting.hpp"

namespace ascurve {

struct LPolynomial {
  BigInt q;
  unsigned g = 0;
  std::vector<BigInt> coeffs;  // a_0 .. a_{2g}

  const BigInt& a(unsigned i) const { return coeffs.at(i); }
  bool operator==(const LPolynomial&) const = default;
};

/// Rebuilds L(T) from N(1..g) by the log-derivative recurrence
/// i a_i = -sum_{k=1}^{i} s_k a_{i-k}, s_k = q^k + 1 - N(k), and completes
/// a_{g+1..2g} by the functional equation.  Any `cross_check` counts are
/// N(g+1), N(g+2), ... and must be reproduced by the result.
LPolynomial l_polynomial_from_counts(const BigInt& q, unsigned g,
                                     std::span<const BigInt> counts,
                                     std::span<const BigInt> cross_check = {});

/// Counts N(1..g) (plus `cross_check_extra` further extensions) and
/// rebuilds L(T).  Requires deg f >= 1 and gcd(deg f, p) = 1.
LPolynomial l_polynomial(const CurveInstance& curve, const EnumOptions& opts = {},
                         unsigned cross_check_extra = 0);

/// Power sums s_1..s_upto of the reciprocal roots (Newton identities).
std::vector<BigInt> power_sums(const LPolynomial& L, unsigned upto);

/// N(i) = q^i + 1 - s_i for i = 1..upto.
std::vector<BigInt> predicted_point_counts(const LPolynomial& L, unsigned upto);

/// max{0 <= j <= g : a_j != 0 mod p}.
unsigned hasse_witt_invariant(const LPolynomial& L, std::uint32_t p);

/// The Artin-Schreier family has a single totally ramified place over the
/// pole of x, which forces Hasse-Witt invariant 0.  Requires a curve with
/// gcd(deg f, p) = 1.
unsigned predicted_hasse_witt_artin_schreier(const CurveInstance& curve);

struct StructureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct WeilStructureReport {
  std::vector<StructureCheck> checks;
  bool all_pass() const;
};

/// a_0 = 1, a_{2g} = q^g, functional equation, and |s_i| <= 2g q^(i/2)
/// for 1 <= i <= 2g (compared after squaring).
WeilStructureReport verify_weil_structure(const LPolynomial& L);

}  // namespace ascurve
