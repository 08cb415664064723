#include "ascurve/lpoly.hpp"

#include <algorithm>

namespace ascurve {

namespace {

// s_1..s_upto from a_0..a_{2g} (a_j = 0 beyond 2g): s_i = -i a_i - sum_{k<i} s_k a_{i-k}
std::vector<BigInt> newton_power_sums(const std::vector<BigInt>& a, unsigned upto) {
  auto coeff = [&](std::size_t j) -> BigInt { return j < a.size() ? a[j] : BigInt(0); };
  std::vector<BigInt> s(upto + 1, 0);
  for (unsigned i = 1; i <= upto; ++i) {
    BigInt acc = -BigInt(i) * coeff(i);
    for (unsigned k = 1; k < i; ++k) acc -= s[k] * coeff(i - k);
    s[i] = acc;
  }
  return s;
}

}  // namespace

LPolynomial l_polynomial_from_counts(const BigInt& q, unsigned g, std::span<const BigInt> counts,
                                     std::span<const BigInt> cross_check) {
  require(q >= 2, "field size q must be >= 2");
  if (counts.size() != g)
    fail(ErrorCode::precondition, "expected exactly g = " + std::to_string(g) +
                                      " point counts, got " + std::to_string(counts.size()));
  LPolynomial L{q, g, std::vector<BigInt>(2 * g + 1, 0)};
  L.coeffs[0] = 1;

  std::vector<BigInt> s(g + 1, 0);
  for (unsigned k = 1; k <= g; ++k) s[k] = ipow(q, k) + 1 - counts[k - 1];

  for (unsigned i = 1; i <= g; ++i) {
    BigInt acc = 0;
    for (unsigned k = 1; k <= i; ++k) acc -= s[k] * L.coeffs[i - k];
    if (acc % i != 0)
      fail(ErrorCode::inconsistent_counts,
           "recurrence step " + std::to_string(i) + " is not integral (" + acc.str() + "/" +
               std::to_string(i) + "); point counts are inconsistent");
    L.coeffs[i] = acc / i;
  }
  for (unsigned i = 0; i < g; ++i) L.coeffs[2 * g - i] = ipow(q, g - i) * L.coeffs[i];

  if (!cross_check.empty()) {
    const unsigned upto = g + static_cast<unsigned>(cross_check.size());
    const auto predicted = predicted_point_counts(L, upto);
    for (std::size_t j = 0; j < cross_check.size(); ++j) {
      const unsigned i = g + 1 + static_cast<unsigned>(j);
      if (predicted[i - 1] != cross_check[j])
        fail(ErrorCode::inconsistent_counts,
             "functional-equation cross-check failed at N(" + std::to_string(i) +
                 "): predicted " + predicted[i - 1].str() + ", counted " + cross_check[j].str());
    }
  }
  return L;
}

LPolynomial l_polynomial(const CurveInstance& curve, const EnumOptions& opts,
                         unsigned cross_check_extra) {
  const FiniteField& field = *curve.field();
  require(curve.degree() >= 1, "L-polynomial needs deg f >= 1");
  require(curve.has_coprime_degree(), "gcd(deg f, p) must be 1");
  const unsigned g = static_cast<unsigned>(*curve.genus());
  std::vector<BigInt> counts, extra;
  for (unsigned i = 1; i <= g; ++i) counts.push_back(count_curve_points(curve, i, opts));
  for (unsigned i = g + 1; i <= g + cross_check_extra; ++i)
    extra.push_back(count_curve_points(curve, i, opts));
  return l_polynomial_from_counts(BigInt(field.size()), g, counts, extra);
}

std::vector<BigInt> power_sums(const LPolynomial& L, unsigned upto) {
  auto s = newton_power_sums(L.coeffs, upto);
  s.erase(s.begin());
  return s;
}

std::vector<BigInt> predicted_point_counts(const LPolynomial& L, unsigned upto) {
  auto s = power_sums(L, upto);
  std::vector<BigInt> out;
  out.reserve(upto);
  for (unsigned i = 1; i <= upto; ++i) out.push_back(ipow(L.q, i) + 1 - s[i - 1]);
  return out;
}

unsigned hasse_witt_invariant(const LPolynomial& L, std::uint32_t p) {
  unsigned best = 0;
  for (unsigned j = 0; j <= L.g && j < L.coeffs.size(); ++j)
    if (L.coeffs[j] % p != 0) best = j;
  return best;
}

unsigned predicted_hasse_witt_artin_schreier(const CurveInstance& curve) {
  require(curve.has_coprime_degree(), "curve must have gcd(deg f, p) = 1");
  return 0;
}

bool WeilStructureReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

WeilStructureReport verify_weil_structure(const LPolynomial& L) {
  WeilStructureReport report;
  const unsigned g = L.g;
  const bool shape_ok = L.coeffs.size() == 2 * g + 1;
  report.checks.push_back({"degree", shape_ok,
                           "coefficient count " + std::to_string(L.coeffs.size()) +
                               ", expected " + std::to_string(2 * g + 1)});
  if (!shape_ok) return report;

  report.checks.push_back({"constant_term", L.coeffs[0] == 1, "a_0 = " + L.coeffs[0].str()});
  const BigInt lead = ipow(L.q, g);
  report.checks.push_back({"leading_coefficient", L.coeffs[2 * g] == lead,
                           "a_2g = " + L.coeffs[2 * g].str() + ", q^g = " + lead.str()});

  bool fe = true;
  std::string fe_detail = "a_{2g-i} = q^{g-i} a_i for 0 <= i <= g";
  for (unsigned i = 0; i <= g; ++i) {
    if (L.coeffs[2 * g - i] != ipow(L.q, g - i) * L.coeffs[i]) {
      fe = false;
      fe_detail = "violated at i = " + std::to_string(i);
      break;
    }
  }
  report.checks.push_back({"functional_equation", fe, fe_detail});

  bool ps = true;
  std::string ps_detail = "|s_i| <= 2g q^(i/2) for 1 <= i <= 2g";
  const auto s = power_sums(L, 2 * g);
  for (unsigned i = 1; i <= 2 * g; ++i) {
    const BigInt lhs = s[i - 1] * s[i - 1];
    const BigInt rhs = 4 * BigInt(g) * BigInt(g) * ipow(L.q, i);
    if (lhs > rhs) {
      ps = false;
      ps_detail = "|s_" + std::to_string(i) + "| = " + BigInt(abs(s[i - 1])).str() + " exceeds 2g q^(i/2)";
      break;
    }
  }
  report.checks.push_back({"power_sum_bound", ps, ps_detail});
  return report;
}

}  // namespace ascurve
