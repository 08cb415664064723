#pragma once

// Walsh spectra W_f(a, b) = sum_x (-1)^(Tr(a f(x)) + Tr(b x)) of functions
// on F_{2^n}, and the nonlinearity bounds derived from the curve bound.

#include <cstdint>
#include <optional>
#include <vector>

#include "ascurve/counting.hpp"
#include "ascurve/field.hpp"
#include "ascurve/polynomial.hpp"

namespace ascurve {

/// Largest n whose full spectrum is stored.
inline constexpr unsigned kDenseSpectrumMaxDegree = 13;

struct WalshSpectrum {
  unsigned n = 0;
  /// max |W(a, b)| over a != 0 and all b.
  std::uint64_t max_abs = 0;
  /// min v_2(W(a, b)) over nonzero values with a != 0; nullopt if all vanish.
  std::optional<std::uint64_t> min_two_adic;
  /// (a - 1) * 2^n + b -> W(a, b); empty above kDenseSpectrumMaxDegree.
  std::vector<std::int64_t> values;

  bool dense() const noexcept { return !values.empty(); }
  std::int64_t at(Code a, Code b) const;
};

/// One fast 2^n-point transform per a != 0, with b mapped to the vector
/// u_j = Tr(b e_j).  Requires characteristic 2.
WalshSpectrum walsh_spectrum(const FiniteField& field, const Polynomial& f,
                             const EnumOptions& opts = {});

/// 2^(n-1) - max_abs / 2.
std::uint64_t nonlinearity(const WalshSpectrum& spectrum);
std::uint64_t nonlinearity(const FiniteField& field, const Polynomial& f,
                           const EnumOptions& opts = {});

/// 2^(n-1) - 2^((n-1)/2); odd n >= 3.
std::uint64_t nl_upper_bound(unsigned n);

/// 2^(n-1) - q * char_sum_bound(2, n, m) / 2; odd n >= 3, odd m >= 3.
std::uint64_t nl_lower_bound_from_theorem(unsigned n, std::uint64_t m);

/// Exponent e with 2^e | W(a, b) for deg f = m odd: ceil(n/g) for
/// g = (m - 1)/2 > 1 and (n + 1)/2 for g = 1.
std::uint64_t walsh_divisibility_exponent(unsigned n, std::uint64_t m);

}  // namespace ascurve
