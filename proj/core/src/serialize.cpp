#include "ascurve/serialize.hpp"

#include <limits>

#include "ascurve/errors.hpp"

namespace ascurve {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(ErrorCode::parse, std::string("missing key \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, std::string("bad value for \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json integer_json(const BigInt& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(value);
  return value.str();
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  fail(ErrorCode::parse, "expected an integer, got " + j.dump());
}

Json rational_json(const Rational& value) { return to_fraction_string(value); }

Json field_json(const FiniteField& field) {
  if (field.is_prime_field() || field.base()->is_prime_field()) {
    const FieldSpec spec = spec_of(field);
    return {{"p", spec.p}, {"n", spec.n}, {"modulus", spec.modulus}};
  }
  return {{"base", field_json(*field.base())},
          {"degree", field.degree()},
          {"modulus", std::vector<Code>(field.modulus().begin(), field.modulus().end())}};
}

FieldPtr field_from_json(const Json& j) {
  if (j.is_object() && j.contains("base")) {
    const FieldPtr base = field_from_json(j.at("base"));
    return FiniteField::extension(base, get_field<std::vector<Code>>(j, "modulus"));
  }
  FieldSpec spec;
  spec.p = get_field<std::uint32_t>(j, "p");
  spec.n = get_field<unsigned>(j, "n");
  if (j.contains("modulus"))
    spec.modulus = get_field<std::vector<Code>>(j, "modulus");
  else
    return make_field(spec.p, spec.n);
  if (spec.n == 1 && spec.modulus == std::vector<Code>{0, 1}) return FiniteField::prime(spec.p);
  return make_field(spec);
}

Json polynomial_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& t : f.terms()) out.push_back({t.exponent, t.coeff});
  return out;
}

Polynomial polynomial_from_json(const FiniteField& field, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::parse, "polynomial must be an array of [exponent, coeff]");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned())
      fail(ErrorCode::parse, "bad polynomial term " + t.dump());
    terms.push_back({t[0].get<std::uint64_t>(), t[1].get<Code>()});
  }
  return Polynomial::from_terms(field, std::move(terms));
}

Json distribution_json(const TraceDistribution& d) {
  Json counts = Json::object();
  for (std::size_t a = 0; a < d.counts.size(); ++a) counts[std::to_string(a)] = d.counts[a];
  return {{"beta", d.beta}, {"counts", counts}};
}

Json char_sum_json(const CharacterSum& s) {
  Json out = {{"p", s.p},
              {"q", s.q},
              {"coefficients", s.coefficients},
              {"is_zero", s.is_zero},
              {"magnitude_approx", s.magnitude},
              {"magnitude_error", s.magnitude_error},
              {"expectation_magnitude_approx", s.expectation_magnitude()}};
  out["exact_magnitude"] = s.exact_magnitude ? Json(*s.exact_magnitude) : Json(nullptr);
  return out;
}

Json lpoly_json(const LPolynomial& L) {
  Json coeffs = Json::array();
  for (const auto& c : L.coeffs) coeffs.push_back(integer_json(c));
  return {{"q", integer_json(L.q)}, {"g", L.g}, {"coeffs", coeffs}};
}

LPolynomial lpoly_from_json(const Json& j) {
  LPolynomial L;
  if (!j.is_object() || !j.contains("q") || !j.contains("coeffs"))
    fail(ErrorCode::parse, "L-polynomial needs \"q\" and \"coeffs\"");
  L.q = integer_from_json(j.at("q"));
  for (const auto& c : j.at("coeffs")) L.coeffs.push_back(integer_from_json(c));
  if (L.coeffs.empty() || L.coeffs.size() % 2 == 0)
    fail(ErrorCode::parse, "L-polynomial needs 2g + 1 coefficients");
  L.g = static_cast<unsigned>(L.coeffs.size() / 2);
  if (j.contains("g") && get_field<unsigned>(j, "g") != L.g)
    fail(ErrorCode::parse, "\"g\" disagrees with the number of coefficients");
  return L;
}

Json structure_json(const WeilStructureReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"all_pass", report.all_pass()}, {"checks", checks}};
}

Json polygon_json(const NewtonPolygon& polygon) {
  Json vertices = Json::array();
  for (const auto& v : polygon.vertices) vertices.push_back({v.index, v.valuation});
  Json segments = Json::array();
  for (const auto& s : polygon.segments)
    segments.push_back({{"slope", rational_json(s.slope)}, {"length", s.length}});
  return {{"prime", polygon.prime}, {"vertices", vertices}, {"segments", segments}};
}

Json surd_json(const SurdValue& s) {
  return {{"expr", s.str()},
          {"coefficient", rational_json(s.coefficient)},
          {"radicand", integer_json(s.radicand)},
          {"floor", integer_json(s.floor())},
          {"approx", s.approx()}};
}

Json bound_report_json(const BoundReport& r) {
  return {{"p", r.params.p},
          {"n", r.params.n},
          {"m", r.params.m},
          {"q", integer_json(r.q)},
          {"g", r.g},
          {"weil_Z", surd_json(r.weil_Z)},
          {"weil_N", surd_json(r.weil_N)},
          {"weil_serre_N", integer_json(r.weil_serre_N)},
          {"weil_serre_Z", integer_json(r.weil_serre_Z)},
          {"main_Z", integer_json(r.main_Z)},
          {"char_sum_E", rational_json(r.char_sum_E.expectation)},
          {"char_sum_scaled", integer_json(r.char_sum_E.scaled)}};
}

Json code_json(const LinearCode& code) {
  Json out = {{"p", code.p()}, {"N", code.length()}, {"k", code.dimension()}};
  if (code.distance) {
    out["d"] = code.distance->value;
    out["d_exact"] = code.distance->exact;
    out["bound_provenance"] = code.distance->provenance;
  } else {
    out["d"] = nullptr;
    out["bound_provenance"] = nullptr;
  }
  out["rows"] = code.rows();
  return out;
}

LinearCode code_from_json(const Json& j) {
  const auto p = get_field<std::uint32_t>(j, "p");
  const auto length = get_field<std::size_t>(j, "N");
  const auto rows = get_field<std::vector<CodeRow>>(j, "rows");
  LinearCode code(p, length, rows);
  if (j.contains("d") && !j.at("d").is_null()) {
    DistanceInfo info;
    info.value = get_field<std::uint64_t>(j, "d");
    info.exact = j.value("d_exact", false);
    if (j.contains("bound_provenance") && j.at("bound_provenance").is_string())
      info.provenance = j.at("bound_provenance").get<std::string>();
    code.distance = info;
  }
  return code;
}

Json spectrum_summary_json(const WalshSpectrum& spectrum, std::uint64_t m) {
  const std::uint64_t nl = nonlinearity(spectrum);
  Json check = Json::object();
  const bool odd_n = spectrum.n >= 3 && spectrum.n % 2 == 1;
  if (odd_n) {
    const std::uint64_t upper = nl_upper_bound(spectrum.n);
    check["nl_upper_bound"] = upper;
    check["upper_ok"] = nl <= upper;
  }
  if (odd_n && m >= 3 && m % 2 == 1) {
    const std::uint64_t lower = nl_lower_bound_from_theorem(spectrum.n, m);
    const BigInt scaled = char_sum_bound({2, spectrum.n, m}).scaled;
    check["nl_lower_bound"] = lower;
    check["lower_ok"] = nl >= lower;
    check["max_abs_bound"] = integer_json(scaled);
    check["max_abs_ok"] = BigInt(spectrum.max_abs) <= scaled;
  }
  return {{"n", spectrum.n},
          {"m", m},
          {"max_abs_walsh", spectrum.max_abs},
          {"nonlinearity", nl},
          {"bound_check", check}};
}

}  // namespace ascurve
