#pragma once

// Dense polynomial arithmetic over a FiniteField, coefficients ascending.
// Used for field construction (irreducibility, inverses) and nothing else.

#include <cstdint>
#include <vector>

#include "ascurve/field.hpp"

namespace ascurve::detail {

using Dense = std::vector<Code>;

inline void trim(Dense& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense dense_sub(const FiniteField& K, Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = K.sub(a[i], b[i]);
  trim(a);
  return a;
}

inline Dense dense_mul(const FiniteField& K, const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

/// Quotient and remainder of a by nonzero m.
inline void dense_divmod(const FiniteField& K, Dense a, const Dense& m, Dense& quot,
                         Dense& rem) {
  trim(a);
  quot.clear();
  if (a.size() < m.size()) {
    rem = std::move(a);
    return;
  }
  const Code lead_inv = K.inv(m.back());
  quot.assign(a.size() - m.size() + 1, 0);
  for (std::size_t k = a.size(); k-- >= m.size();) {
    if (a[k] == 0) continue;
    const Code c = K.mul(a[k], lead_inv);
    const std::size_t shift = k - (m.size() - 1);
    quot[shift] = c;
    for (std::size_t j = 0; j < m.size(); ++j)
      a[shift + j] = K.sub(a[shift + j], K.mul(c, m[j]));
  }
  trim(a);
  trim(quot);
  rem = std::move(a);
}

inline Dense dense_mod(const FiniteField& K, Dense a, const Dense& m) {
  Dense q, r;
  dense_divmod(K, std::move(a), m, q, r);
  return r;
}

inline Dense dense_powmod(const FiniteField& K, Dense base, std::uint64_t e,
                          const Dense& m) {
  Dense result{1};
  base = dense_mod(K, std::move(base), m);
  while (e != 0) {
    if (e & 1U) result = dense_mod(K, dense_mul(K, result, base), m);
    e >>= 1U;
    if (e != 0) base = dense_mod(K, dense_mul(K, base, base), m);
  }
  return dense_mod(K, std::move(result), m);
}

/// Monic gcd.
inline Dense dense_gcd(const FiniteField& K, Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Dense r = dense_mod(K, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Code inv = K.inv(a.back());
    for (auto& c : a) c = K.mul(c, inv);
  }
  return a;
}

/// u with u*a = 1 mod m, m irreducible, a not divisible by m.
inline Dense dense_inverse_mod(const FiniteField& K, Dense a, const Dense& m) {
  Dense r0 = m, r1 = dense_mod(K, std::move(a), m);
  Dense s0{}, s1{1};
  while (!r1.empty()) {
    Dense q, r;
    dense_divmod(K, r0, r1, q, r);
    Dense s = dense_sub(K, s0, dense_mul(K, q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant
  const Code inv = K.inv(r0.at(0));
  for (auto& c : s0) c = K.mul(c, inv);
  trim(s0);
  return s0;
}

}  // namespace ascurve::detail
