#include "ascurve/bigint.hpp"

#include <stdexcept>

namespace ascurve {

BigInt ipow(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

BigInt isqrt(const BigInt& x) {
  if (x < 0) throw std::domain_error("isqrt of a negative integer");
  BigInt s = boost::multiprecision::sqrt(x);
  // boost's sqrt is exact for cpp_int, but keep the postcondition explicit
  while (s * s > x) --s;
  while ((s + 1) * (s + 1) <= x) ++s;
  return s;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

std::uint64_t valuation(BigInt x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("valuation of zero is infinite");
  std::uint64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_fraction(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(BigInt(text));
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + text);
  return Rational(num, den);
}

std::string to_string(const BigInt& x) { return x.str(); }

}  // namespace ascurve
