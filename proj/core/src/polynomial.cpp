#include "ascurve/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ascurve {

namespace {

constexpr std::uint64_t kDenseEvaluationLimit = 4096;

void normalize(const FiniteField& field, std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (!merged.empty() && merged.back().exponent == t.exponent)
      merged.back().coeff = field.add(merged.back().coeff, t.coeff);
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(merged);
}

std::uint64_t parse_uint(std::string_view text, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    fail(ErrorCode::parse, "malformed " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

Polynomial Polynomial::from_terms(const FiniteField& field, std::vector<Term> terms) {
  for (const Term& t : terms)
    if (!field.contains(t.coeff))
      fail(ErrorCode::usage, "coefficient " + std::to_string(t.coeff) +
                                 " is not an element of " + field.describe());
  Polynomial f;
  normalize(field, terms);
  f.terms_ = std::move(terms);
  return f;
}

Polynomial Polynomial::monomial(Code coeff, std::uint64_t exponent) {
  Polynomial f;
  if (coeff != 0) f.terms_.push_back({exponent, coeff});
  return f;
}

Polynomial Polynomial::from_dense(std::span<const Code> coeffs) {
  Polynomial f;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) f.terms_.push_back({i, coeffs[i]});
  return f;
}

Code Polynomial::coefficient(std::uint64_t exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, std::uint64_t e) { return t.exponent < e; });
  return (it != terms_.end() && it->exponent == exponent) ? it->coeff : 0;
}

Polynomial Polynomial::scaled(const FiniteField& field, Code c) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back({t.exponent, field.mul(c, t.coeff)});
  return from_terms(field, std::move(out));
}

Polynomial Polynomial::plus(const FiniteField& field, const Polynomial& other) const {
  std::vector<Term> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return from_terms(field, std::move(all));
}

Polynomial Polynomial::minus_constant(const FiniteField& field, Code c) const {
  return plus(field, monomial(field.neg(c), 0));
}

Code Polynomial::evaluate(const FiniteField& field, Code x) const {
  Code acc = 0;
  for (const Term& t : terms_) acc = field.add(acc, field.mul(t.coeff, field.pow(x, t.exponent)));
  return acc;
}

PolynomialEvaluator::PolynomialEvaluator(const FiniteField& field, const Polynomial& f)
    : field_(&field), sparse_(f) {
  const auto degree = static_cast<std::uint64_t>(std::max<std::int64_t>(f.degree(), 0));
  // Horner costs deg f products, square-and-multiply about 2 log2(e) per term
  const std::uint64_t sparse_cost = 2 * f.terms().size() * std::bit_width(degree);
  if (!f.is_zero() && degree <= kDenseEvaluationLimit && f.terms().size() > 1 &&
      degree <= sparse_cost) {
    dense_.assign(static_cast<std::size_t>(f.degree()) + 1, 0);
    for (const Term& t : f.terms()) dense_[t.exponent] = t.coeff;
  }
}

Code PolynomialEvaluator::operator()(Code x) const {
  if (dense_.empty()) return sparse_.evaluate(*field_, x);
  Code acc = 0;
  for (std::size_t i = dense_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, x), dense_[i]);
  return acc;
}

Polynomial parse_polynomial(const FiniteField& field, std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  if (compact.empty()) fail(ErrorCode::parse, "empty polynomial");

  std::vector<Term> terms;
  std::size_t start = 0;
  while (start <= compact.size()) {
    const std::size_t end = std::min(compact.find('+', start), compact.size());
    const std::string_view term(compact.data() + start, end - start);
    if (term.empty()) fail(ErrorCode::parse, "empty term in '" + compact + "'");

    Code coeff = 1;
    std::uint64_t exponent = 0;
    const std::size_t xpos = term.find('x');
    if (xpos == std::string_view::npos) {
      coeff = parse_uint(term, "coefficient");
    } else {
      std::string_view head = term.substr(0, xpos);
      std::string_view tail = term.substr(xpos + 1);
      if (!head.empty()) {
        if (head.back() != '*') fail(ErrorCode::parse, "expected '*' before x in '" + std::string(term) + "'");
        coeff = parse_uint(head.substr(0, head.size() - 1), "coefficient");
      }
      if (tail.empty()) {
        exponent = 1;
      } else {
        if (tail.front() != '^') fail(ErrorCode::parse, "expected '^' after x in '" + std::string(term) + "'");
        exponent = parse_uint(tail.substr(1), "exponent");
      }
    }
    if (!field.contains(coeff))
      fail(ErrorCode::parse, "coefficient " + std::to_string(coeff) + " is not an element of " +
                                 field.describe());
    terms.push_back({exponent, coeff});
    start = end + 1;
  }
  return Polynomial::from_terms(field, std::move(terms));
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    if (it->exponent == 0) {
      os << it->coeff;
      continue;
    }
    if (it->coeff != 1) os << it->coeff << "*";
    os << "x";
    if (it->exponent != 1) os << "^" << it->exponent;
  }
  return os.str();
}

}  // namespace ascurve
