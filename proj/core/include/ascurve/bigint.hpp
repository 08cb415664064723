#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace ascurve {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// base^exponent over the integers.
BigInt ipow(const BigInt& base, std::uint64_t exponent);

/// Largest s with s*s <= x. Requires x >= 0.
BigInt isqrt(const BigInt& x);

/// floor(a / b) for b > 0 (rounds toward negative infinity).
BigInt floor_div(const BigInt& a, const BigInt& b);

/// ceil(a / b) for b > 0.
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// p-adic valuation of a nonzero integer.
std::uint64_t valuation(BigInt x, std::uint64_t p);

bool is_prime(std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// "num/den" in lowest terms; integers are still written with "/1".
std::string to_fraction_string(const Rational& r);

/// Parses "num/den" or a bare integer.
Rational parse_fraction(const std::string& text);

std::string to_string(const BigInt& x);

}  // namespace ascurve
