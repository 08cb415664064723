#include "ascurve/walsh.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "ascurve/bounds.hpp"
#include "ascurve/errors.hpp"
#include "parallel.hpp"

namespace ascurve {

namespace {

void fwht(std::vector<std::int64_t>& v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1)
    for (std::size_t i = 0; i < v.size(); i += len << 1)
      for (std::size_t j = i; j < i + len; ++j) {
        const std::int64_t x = v[j], y = v[j + len];
        v[j] = x + y;
        v[j + len] = x - y;
      }
}

struct Partial {
  std::uint64_t max_abs = 0;
  std::optional<std::uint64_t> min_two_adic;
};

Partial merge(Partial a, const Partial& b) {
  a.max_abs = std::max(a.max_abs, b.max_abs);
  if (b.min_two_adic && (!a.min_two_adic || *b.min_two_adic < *a.min_two_adic))
    a.min_two_adic = b.min_two_adic;
  return a;
}

void require_odd_n(unsigned n) {
  require(n >= 3 && n % 2 == 1, "n = " + std::to_string(n) + " must be odd and >= 3");
}

}  // namespace

std::int64_t WalshSpectrum::at(Code a, Code b) const {
  require(dense(), "spectrum was not stored densely");
  const Code q = Code{1} << n;
  require(a >= 1 && a < q && b < q, "(a, b) out of range");
  return values[(a - 1) * q + b];
}

WalshSpectrum walsh_spectrum(const FiniteField& field, const Polynomial& f,
                             const EnumOptions& opts) {
  require(field.characteristic() == 2, "Walsh spectra need characteristic 2");
  enumerate(field, opts.max_elements);
  const unsigned n = field.absolute_degree();
  const Code q = field.size();

  // b -> u(b): u_j = Tr(b e_j), linear in b
  std::vector<Code> column(n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (field.trace(field.mul(Code{1} << i, Code{1} << j))) column[i] |= Code{1} << j;
  std::vector<Code> u_of_b(q, 0);
  for (Code b = 1; b < q; ++b)
    u_of_b[b] = u_of_b[b & (b - 1)] ^ column[std::countr_zero(b)];

  const PolynomialEvaluator eval(field, f);
  std::vector<Code> fx(q);
  for (Code x = 0; x < q; ++x) fx[x] = eval(x);

  WalshSpectrum out;
  out.n = n;
  const bool dense = n <= kDenseSpectrumMaxDegree;
  if (dense) out.values.assign((q - 1) * q, 0);

  const auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    Partial part;
    std::vector<std::int64_t> h(q);
    for (Code a = lo; a < hi; ++a) {
      for (Code x = 0; x < q; ++x) h[x] = field.trace(field.mul(a, fx[x])) ? -1 : 1;
      fwht(h);
      for (Code b = 0; b < q; ++b) {
        const std::int64_t w = h[u_of_b[b]];
        if (dense) out.values[(a - 1) * q + b] = w;
        const auto mag = static_cast<std::uint64_t>(std::llabs(w));
        part.max_abs = std::max(part.max_abs, mag);
        if (mag != 0) {
          const std::uint64_t v = static_cast<std::uint64_t>(std::countr_zero(mag));
          if (!part.min_two_adic || v < *part.min_two_adic) part.min_two_adic = v;
        }
      }
    }
    return part;
  };
  const Partial all = detail::partitioned<Partial>(1, q, opts.threads, Partial{}, chunk, merge);
  out.max_abs = all.max_abs;
  out.min_two_adic = all.min_two_adic;
  return out;
}

std::uint64_t nonlinearity(const WalshSpectrum& spectrum) {
  return (std::uint64_t{1} << (spectrum.n - 1)) - spectrum.max_abs / 2;
}

std::uint64_t nonlinearity(const FiniteField& field, const Polynomial& f,
                           const EnumOptions& opts) {
  return nonlinearity(walsh_spectrum(field, f, opts));
}

std::uint64_t nl_upper_bound(unsigned n) {
  require_odd_n(n);
  require(n < 64, "n too large");
  return (std::uint64_t{1} << (n - 1)) - (std::uint64_t{1} << ((n - 1) / 2));
}

std::uint64_t nl_lower_bound_from_theorem(unsigned n, std::uint64_t m) {
  require_odd_n(n);
  require(n < 64, "n too large");
  require(m >= 3 && m % 2 == 1, "m = " + std::to_string(m) + " must be odd and >= 3");
  const BigInt scaled = char_sum_bound({2, n, m}).scaled;
  const BigInt half_q = BigInt(std::uint64_t{1} << (n - 1));
  const BigInt result = half_q - scaled / 2;
  return result < 0 ? 0 : static_cast<std::uint64_t>(result);
}

std::uint64_t walsh_divisibility_exponent(unsigned n, std::uint64_t m) {
  require_odd_n(n);
  require(m >= 3 && m % 2 == 1, "m = " + std::to_string(m) + " must be odd and >= 3");
  const std::uint64_t g = (m - 1) / 2;
  return g == 1 ? (n + 1) / 2 : (n + g - 1) / g;
}

}  // namespace ascurve
