#include "ascurve/codes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "ascurve/bounds.hpp"
#include "ascurve/errors.hpp"
#include "parallel.hpp"

namespace ascurve {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint32_t>((t % p + p) % p);
}

std::vector<CodeRow> row_echelon(std::vector<CodeRow> m, std::uint32_t p, std::size_t length) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const std::uint32_t inv = inverse_mod(m[rank][col], p);
    for (auto& v : m[rank]) v = static_cast<std::uint8_t>(v * inv % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const std::uint32_t factor = m[r][col];
      for (std::size_t c = col; c < length; ++c)
        m[r][c] = static_cast<std::uint8_t>((m[r][c] + (p - factor) * m[rank][c]) % p);
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

std::uint64_t checked_codeword_count(const LinearCode& code, std::uint64_t budget) {
  require(code.dimension() >= 1, "code has dimension 0; no nonzero codeword");
  const BigInt total = ipow(BigInt(code.p()), code.dimension());
  if (total > budget) throw CapacityError("codeword enumeration", total, BigInt(budget));
  return static_cast<std::uint64_t>(total);
}

// Calls visit(weight) for the codewords with message index in [lo, hi).
template <class Visit>
void walk_binary(const LinearCode& code, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  const std::size_t words = (code.length() + 63) / 64;
  const auto& basis = code.basis();
  std::vector<std::vector<std::uint64_t>> packed(basis.size(), std::vector<std::uint64_t>(words));
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < code.length(); ++c)
      if (basis[r][c]) packed[r][c / 64] |= std::uint64_t{1} << (c % 64);

  std::vector<std::uint64_t> cw(words, 0);
  if (lo > 0) {
    const std::uint64_t start = (lo - 1) ^ ((lo - 1) >> 1);
    for (std::size_t r = 0; r < packed.size(); ++r)
      if ((start >> r) & 1)
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= packed[r][w];
  }
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (i > 0) {
      const auto& row = packed[std::countr_zero(i)];
      for (std::size_t w = 0; w < words; ++w) cw[w] ^= row[w];
    }
    std::uint64_t weight = 0;
    for (auto w : cw) weight += static_cast<std::uint64_t>(std::popcount(w));
    visit(weight);
  }
}

template <class Visit>
void walk_odd(const LinearCode& code, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  const std::uint32_t p = code.p();
  const auto& basis = code.basis();
  const std::size_t k = basis.size(), len = code.length();
  // nonzero support of every row, for incremental weight updates
  std::vector<std::vector<std::pair<std::uint32_t, std::uint8_t>>> support(k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < len; ++c)
      if (basis[r][c]) support[r].emplace_back(static_cast<std::uint32_t>(c), basis[r][c]);

  std::vector<std::uint32_t> digits(k, 0);
  std::vector<std::uint8_t> cw(len, 0);
  std::uint64_t weight = 0;
  if (lo > 0) {
    std::uint64_t idx = lo - 1;
    for (std::size_t r = 0; r < k; ++r, idx /= p) digits[r] = static_cast<std::uint32_t>(idx % p);
    for (std::size_t c = 0; c < len; ++c) {
      std::uint32_t v = 0;
      for (std::size_t r = 0; r < k; ++r) v += digits[r] * basis[r][c];
      cw[c] = static_cast<std::uint8_t>(v % p);
      weight += cw[c] != 0;
    }
  }
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (i > 0) {
      for (std::size_t r = 0; r < k; ++r) {
        for (const auto& [c, v] : support[r]) {
          const std::uint32_t old = cw[c];
          std::uint32_t nv = old + v;
          if (nv >= p) nv -= p;
          cw[c] = static_cast<std::uint8_t>(nv);
          weight += (nv != 0);
          weight -= (old != 0);
        }
        if (++digits[r] < p) break;
        digits[r] = 0;
      }
    }
    visit(weight);
  }
}

template <class Visit>
void walk(const LinearCode& code, std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  if (code.p() == 2)
    walk_binary(code, lo, hi, visit);
  else
    walk_odd(code, lo, hi, visit);
}

std::uint64_t genus_from_product(std::uint64_t product) {
  require(product % 2 == 0, "genus is not an integer");
  return product / 2;
}

BigInt distance_bound_from_genus(std::uint64_t p, unsigned n, std::uint64_t g, bool skip_zero) {
  const BigInt q = ipow(BigInt(p), n);
  const BigInt front = (skip_zero ? q - 1 : q) - ipow(BigInt(p), n - 1);
  return front - improved_deviation_for_genus(p, n, g);
}

void require_code_params(std::uint64_t p, unsigned n) {
  require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
  require(n >= 3 && n % 2 == 1, "n = " + std::to_string(n) + " must be odd and >= 3");
}

}  // namespace

LinearCode::LinearCode(std::uint32_t p, std::size_t length, std::vector<CodeRow> rows)
    : p_(p), length_(length), rows_(std::move(rows)) {
  require(p < 256 && is_prime(p), "code alphabet must be a prime below 256");
  for (const auto& row : rows_) {
    require(row.size() == length_, "generator row length differs from code length");
    require(std::all_of(row.begin(), row.end(), [p](std::uint8_t v) { return v < p; }),
            "generator entry out of range mod p");
  }
  basis_ = row_echelon(rows_, p_, length_);
}

bool LinearCode::same_code(const LinearCode& other) const {
  return p_ == other.p_ && length_ == other.length_ && basis_ == other.basis_;
}

std::vector<Polynomial> basis_monomials(const FiniteField& field,
                                        std::span<const std::uint64_t> exponents) {
  std::vector<Polynomial> out;
  const unsigned n = field.absolute_degree();
  for (std::uint64_t j : exponents) {
    Code gamma = 1;
    for (unsigned i = 0; i < n; ++i, gamma *= field.characteristic())
      out.push_back(Polynomial::monomial(gamma, j));
  }
  return out;
}

LinearCode build_trace_code(const FiniteField& field, std::span<const Code> points,
                            std::span<const Polynomial> generators, bool include_all_one,
                            std::span<const Code> twist) {
  require(field.characteristic() < 256, "code alphabet must be a prime below 256");
  require(twist.empty() || twist.size() == points.size(), "twist length differs from point count");
  std::vector<Code> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end());
  require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
          "evaluation points must be distinct");
  for (Code x : sorted)
    if (!field.contains(x)) fail(ErrorCode::usage, "evaluation point outside the field");

  std::vector<CodeRow> rows;
  if (include_all_one) rows.emplace_back(points.size(), 1);
  for (const auto& g : generators) {
    const PolynomialEvaluator eval(field, g);
    CodeRow row(points.size());
    for (std::size_t k = 0; k < points.size(); ++k) {
      Code value = eval(points[k]);
      if (!twist.empty()) value = field.mul(twist[k], value);
      row[k] = static_cast<std::uint8_t>(field.trace(value));
    }
    rows.push_back(std::move(row));
  }
  return LinearCode(field.characteristic(), points.size(), std::move(rows));
}

ConstructedCode dual_bch_with_allone(std::uint32_t p, unsigned t, unsigned n) {
  return dual_bch_with_allone(make_field(p, n), t);
}

ConstructedCode dual_bch_with_allone(const FieldPtr& field, unsigned t) {
  const std::uint64_t p = field->characteristic();
  const Code q = field->size();
  require(t >= 1 && t < q - 1, "t = " + std::to_string(t) + " must satisfy 1 <= t < q - 1");
  enumerate(*field, kDefaultEnumerationBudget);
  std::vector<std::uint64_t> exponents;
  for (std::uint64_t j = 1; j <= t; ++j)
    if (j % p != 0) exponents.push_back(j);
  std::vector<Code> points(q - 1);
  std::iota(points.begin(), points.end(), Code{1});
  const auto gens = basis_monomials(*field, exponents);
  ConstructedCode out{build_trace_code(*field, points, gens, true), field, 0, false, std::nullopt};
  out.expected_dimension = 1 + std::uint64_t{field->absolute_degree()} * (t - t / p);
  const std::uint64_t lhs = (p - 1) * t;
  out.dimension_guaranteed = lhs * lhs < q;
  return out;
}

Polynomial default_goppa_polynomial(const FiniteField& field, unsigned t) {
  require(t >= 1, "goppa polynomial degree must be >= 1");
  const Code q = field.size();
  enumerate(field, kDefaultEnumerationBudget);
  std::vector<Code> coeffs(t + 1, 0);
  coeffs[t] = 1;
  while (true) {
    const auto g = Polynomial::from_dense(coeffs);
    const PolynomialEvaluator eval(field, g);
    bool rootless = true;
    for (Code x = 0; x < q && rootless; ++x) rootless = eval(x) != 0;
    if (rootless) return g;
    // next lower-coefficient vector, c_0 fastest
    std::size_t i = 0;
    while (i < t && ++coeffs[i] == q) coeffs[i++] = 0;
    require(i < t, "no rootless monic polynomial of degree " + std::to_string(t));
  }
}

ConstructedCode goppa_dual(std::uint32_t p, unsigned n, unsigned t,
                           const std::optional<Polynomial>& goppa) {
  return goppa_dual(make_field(p, n), t, goppa);
}

ConstructedCode goppa_dual(const FieldPtr& field, unsigned t,
                           const std::optional<Polynomial>& goppa) {
  const std::uint64_t p = field->characteristic();
  const Code q = field->size();
  require(t >= 1, "t must be >= 1");
  require(t % p != 0, "gcd(t, p) must be 1");
  enumerate(*field, kDefaultEnumerationBudget);
  const Polynomial g = goppa ? *goppa : default_goppa_polynomial(*field, t);
  require(g.degree() == static_cast<std::int64_t>(t), "goppa polynomial must have degree t");
  for (const auto& term : g.terms())
    if (!field->contains(term.coeff)) fail(ErrorCode::usage, "goppa coefficient outside the field");

  const PolynomialEvaluator eval(*field, g);
  std::vector<Code> points(q), twist(q);
  for (Code x = 0; x < q; ++x) {
    points[x] = x;
    twist[x] = eval(x);
    require(twist[x] != 0, "goppa polynomial has a root in F_q");
  }
  std::vector<std::uint64_t> exponents(t);
  std::iota(exponents.begin(), exponents.end(), std::uint64_t{0});
  const auto gens = basis_monomials(*field, exponents);
  ConstructedCode out{build_trace_code(*field, points, gens, true, twist), field, 0, false, g};
  out.expected_dimension = 1 + std::uint64_t{field->absolute_degree()} * (t - (t - 1) / p);
  const std::uint64_t lhs = (p - 1) * t;
  out.dimension_guaranteed = lhs * lhs < q;
  return out;
}

std::uint64_t min_distance_exhaustive(const LinearCode& code, const DistanceOptions& opts) {
  const std::uint64_t total = checked_codeword_count(code, opts.max_codewords);
  const auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t best = UINT64_MAX;
    walk(code, lo, hi, [&](std::uint64_t w) {
      if (w != 0 && w < best) best = w;
    });
    return best;
  };
  return detail::partitioned<std::uint64_t>(
      1, total, opts.threads, UINT64_MAX, chunk,
      [](std::uint64_t a, std::uint64_t b) { return std::min(a, b); });
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code,
                                               const DistanceOptions& opts) {
  const std::uint64_t total = checked_codeword_count(code, opts.max_codewords);
  const std::size_t len = code.length();
  const auto chunk = [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> counts(len + 1, 0);
    walk(code, lo, hi, [&](std::uint64_t w) { ++counts[w]; });
    return counts;
  };
  const auto merge = [](std::vector<std::uint64_t> a, std::vector<std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  };
  return detail::partitioned<std::vector<std::uint64_t>>(
      0, total, opts.threads, std::vector<std::uint64_t>(len + 1, 0), chunk, merge);
}

BigInt distance_bound_dual_bch(std::uint64_t p, unsigned t, unsigned n) {
  require_code_params(p, n);
  require(t >= 1, "t must be >= 1");
  const std::uint64_t g =
      genus_from_product(t % p != 0 ? (p - 1) * (t - 1) : (p - 1) * (t - 2));
  require(g >= 1, "genus is 0 for t = " + std::to_string(t) + "; the bound is undefined");
  return distance_bound_from_genus(p, n, g, true);
}

BigInt distance_bound_goppa_dual(std::uint64_t p, unsigned n, unsigned t) {
  require_code_params(p, n);
  require(t >= 2, "t must be >= 2");
  const std::uint64_t reduced = (t - 1) % p != 0 ? t - 2 : (t >= 3 ? t - 3 : 0);
  const std::uint64_t g = genus_from_product((p - 1) * reduced);
  require(g >= 1, "genus is 0 for t = " + std::to_string(t) +
                      "; the bound is undefined (twisted codewords have degree up to t + 1, "
                      "see zero_count_distance_bound)");
  return distance_bound_from_genus(p, n, g, false);
}

BigInt zero_count_distance_bound(std::uint64_t p, unsigned n, std::uint64_t max_degree) {
  require_code_params(p, n);
  const BigInt q = ipow(BigInt(p), n);
  BigInt worst = 0;
  for (std::uint64_t m = 2; m <= max_degree; ++m) {
    if (m % p == 0 || ((m - 1) * (p - 1)) % 2 != 0) continue;
    worst = std::max(worst, main_bound({p, n, m}));
  }
  return q - q / p - worst;
}

}  // namespace ascurve
