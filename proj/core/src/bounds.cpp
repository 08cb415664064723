#include "ascurve/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "ascurve/errors.hpp"

namespace ascurve {

BigInt floor_two_sqrt(const BigInt& q) {
  require(q >= 1, "q must be >= 1");
  return isqrt(4 * q);
}

BigInt SurdValue::floor() const {
  // floor(a/b * sqrt(r)) = floor(isqrt(a^2 r) / b)
  const BigInt a = numerator(coefficient), b = denominator(coefficient);
  return floor_div(isqrt(a * a * radicand), b);
}

double SurdValue::approx() const {
  return static_cast<double>(coefficient) * std::sqrt(static_cast<double>(radicand));
}

bool SurdValue::at_most(const Rational& x) const {
  if (x < 0) return false;
  return coefficient * coefficient * radicand <= x * x;
}

bool SurdValue::at_least(const Rational& x) const {
  if (x <= 0) return true;
  return x * x <= coefficient * coefficient * radicand;
}

std::string SurdValue::str() const {
  const std::string c = denominator(coefficient) == 1 ? numerator(coefficient).str()
                                                      : "(" + to_fraction_string(coefficient) + ")";
  return c + "*sqrt(" + radicand.str() + ")";
}

BigInt BoundParams::q() const { return ipow(BigInt(p), n); }

std::uint64_t BoundParams::genus() const { return (m - 1) * (p - 1) / 2; }

void validate_curve_params(const BoundParams& params) {
  require(is_prime(params.p), "p = " + std::to_string(params.p) + " is not prime");
  require(params.n >= 1, "n must be >= 1");
  require(params.m >= 2, "m = " + std::to_string(params.m) + " must be >= 2 (genus 0 has no bound)");
  require(gcd_u64(params.m, params.p) == 1,
          "gcd(m, p) = gcd(" + std::to_string(params.m) + ", " + std::to_string(params.p) +
              ") must be 1");
  require(((params.m - 1) * (params.p - 1)) % 2 == 0, "genus (m-1)(p-1)/2 is not an integer");
}

void validate_improved_params(const BoundParams& params) {
  validate_curve_params(params);
  require(params.n % 2 == 1, "n = " + std::to_string(params.n) + " must be odd");
  require(params.n >= 3, "n = " + std::to_string(params.n) + " must be >= 3");
}

WeilBounds weil_bounds(const BoundParams& params) {
  validate_curve_params(params);
  const BigInt q = params.q();
  const std::uint64_t g = params.genus();
  WeilBounds out;
  out.zeros = {Rational(BigInt((params.p - 1) * (params.m - 1)), BigInt(params.p)), q};
  out.points = {Rational(2 * BigInt(g)), q};
  return out;
}

WeilSerreBounds weil_serre_bounds(const BoundParams& params) {
  validate_curve_params(params);
  const BigInt points = BigInt(params.genus()) * floor_two_sqrt(params.q());
  return {points, points / params.p};
}

namespace {

// (exponent of p in the scale, floored quotient) such that the improved
// deviation bound on |N - q - 1| is p^e * quotient
struct ImprovedParts {
  std::uint64_t exponent;
  BigInt quotient;
};

ImprovedParts improved_parts(std::uint64_t p, unsigned n, std::uint64_t g) {
  const BigInt f2 = floor_two_sqrt(ipow(BigInt(p), n));
  if (g == 1) {
    const std::uint64_t e = (n + 1) / 2;
    return {e, f2 / ipow(BigInt(p), e)};
  }
  const std::uint64_t e = (n + g - 1) / g;  // ceil(n/g)
  return {e, (BigInt(g) * f2) / ipow(BigInt(p), e)};
}

ImprovedParts improved_parts(const BoundParams& params) {
  validate_improved_params(params);
  return improved_parts(params.p, params.n, params.genus());
}

}  // namespace

BigInt main_bound(const BoundParams& params) {
  const auto parts = improved_parts(params);
  return ipow(BigInt(params.p), parts.exponent - 1) * parts.quotient;
}

BigInt improved_deviation_for_genus(std::uint64_t p, unsigned n, std::uint64_t g) {
  require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
  require(n >= 3 && n % 2 == 1, "n = " + std::to_string(n) + " must be odd and >= 3");
  require(g >= 1, "genus must be >= 1");
  const auto parts = improved_parts(p, n, g);
  return ipow(BigInt(p), parts.exponent - 1) * parts.quotient;
}

CharSumBound char_sum_bound(const BoundParams& params) {
  const auto parts = improved_parts(params);
  CharSumBound out;
  out.scaled = ipow(BigInt(params.p), parts.exponent) * parts.quotient;
  out.expectation = Rational(out.scaled, params.q());
  return out;
}

BoundReport compare_report(const BoundParams& params) {
  validate_improved_params(params);
  BoundReport r;
  r.params = params;
  r.q = params.q();
  r.g = params.genus();
  const auto weil = weil_bounds(params);
  r.weil_Z = weil.zeros;
  r.weil_N = weil.points;
  const auto ws = weil_serre_bounds(params);
  r.weil_serre_N = ws.points;
  r.weil_serre_Z = ws.zeros;
  r.main_Z = main_bound(params);
  r.char_sum_E = char_sum_bound(params);
  if (!(r.main_Z <= r.weil_serre_Z && r.weil_Z.at_least(Rational(r.weil_serre_Z))))
    throw std::logic_error("bound improvement chain violated for p=" + std::to_string(params.p) +
                           ", n=" + std::to_string(params.n) + ", m=" + std::to_string(params.m));
  return r;
}

}  // namespace ascurve
