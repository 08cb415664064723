#pragma once

// Exact evaluation of the Weil, Weil-Serre and improved (Hasse-Witt zero)
// bounds for |Z_f| and for character sums, q = p^n, g = (m - 1)(p - 1)/2.
// Square roots are symbolic; every floor is taken over the integers.

#include <cstdint>
#include <string>

#include "ascurve/bigint.hpp"

namespace ascurve {

/// floor(2 sqrt(q)) = isqrt(4q).
BigInt floor_two_sqrt(const BigInt& q);

/// coefficient * sqrt(radicand), coefficient >= 0.
struct SurdValue {
  Rational coefficient;
  BigInt radicand;

  BigInt floor() const;
  double approx() const;
  /// this <= x, decided by squaring.
  bool at_most(const Rational& x) const;
  /// x <= this, decided by squaring.
  bool at_least(const Rational& x) const;
  /// e.g. "2000*sqrt(32)".
  std::string str() const;
};

struct BoundParams {
  std::uint64_t p = 2;
  unsigned n = 1;
  std::uint64_t m = 2;

  BigInt q() const;
  /// (m - 1)(p - 1)/2; requires the validated parameters.
  std::uint64_t genus() const;
};

/// p prime, n >= 1, m >= 2, gcd(m, p) = 1 and integral g >= 1; throws a
/// precondition error naming the failed condition.
void validate_curve_params(const BoundParams& params);

/// Adds odd n >= 3 to validate_curve_params.
void validate_improved_params(const BoundParams& params);

struct WeilBounds {
  SurdValue zeros;   // (p-1)(m-1) sqrt(q) / p
  SurdValue points;  // 2g sqrt(q)
};
WeilBounds weil_bounds(const BoundParams& params);

struct WeilSerreBounds {
  BigInt points;  // g floor(2 sqrt q)
  BigInt zeros;   // floor(g floor(2 sqrt q) / p)
};
WeilSerreBounds weil_serre_bounds(const BoundParams& params);

/// Improved bound on ||Z_f| - q/p| for odd n:
///   g > 1: p^(ceil(n/g) - 1) floor(g floor(2 sqrt q) / p^ceil(n/g))
///   g = 1: p^((n-1)/2) floor(floor(2 sqrt q) / p^((n+1)/2))
BigInt main_bound(const BoundParams& params);

/// The same right-hand side written directly in terms of a genus g >= 1,
/// for odd n >= 3.  Used where the genus does not come from deg f.
BigInt improved_deviation_for_genus(std::uint64_t p, unsigned n, std::uint64_t g);

struct CharSumBound {
  Rational expectation;  // bound on |E chi_beta(f)|
  BigInt scaled;         // q * expectation, a bound on |sum_x chi_beta(f(x))|
};
CharSumBound char_sum_bound(const BoundParams& params);

struct BoundReport {
  BoundParams params;
  BigInt q;
  std::uint64_t g = 0;
  SurdValue weil_Z;
  SurdValue weil_N;
  BigInt weil_serre_N;
  BigInt weil_serre_Z;
  BigInt main_Z;
  CharSumBound char_sum_E;
};

/// All of the above; enforces main_Z <= weil_serre_Z <= weil_Z.
BoundReport compare_report(const BoundParams& params);

}  // namespace ascurve
