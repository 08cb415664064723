#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "ascurve/bounds.hpp"
#include "ascurve/codes.hpp"
#include "ascurve/counting.hpp"
#include "ascurve/errors.hpp"
#include "ascurve/lpoly.hpp"
#include "ascurve/newton.hpp"
#include "ascurve/reference_checks.hpp"
#include "ascurve/serialize.hpp"
#include "ascurve/walsh.hpp"

namespace ascurve::cli {

namespace {

const std::vector<std::string> kSubcommands = {
    "field",  "count-zeros",    "curve-points", "char-sum",   "lpoly", "hasse-witt",
    "newton-polygon", "bounds", "trace-code",   "min-distance", "walsh", "verify-paper"};

struct Limits {
  std::uint64_t max_enum = kDefaultEnumerationBudget;
  std::uint64_t max_codewords = kDefaultCodewordBudget;
  unsigned threads = 1;
  std::string manifest;

  EnumOptions enum_options() const { return {max_enum, threads}; }
  DistanceOptions distance_options() const { return {max_codewords, threads}; }
};

struct FieldArgs {
  std::uint32_t p = 2;
  unsigned n = 1;
  std::string modulus;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    try {
      if constexpr (std::is_same_v<T, BigInt>) {
        if (item.empty()) throw std::invalid_argument("empty");
        out.emplace_back(item);
      } else {
        std::size_t used = 0;
        if (item.empty() || item[0] == '-') throw std::invalid_argument("negative");
        out.push_back(static_cast<T>(std::stoull(item, &used)));
        if (used != item.size()) throw std::invalid_argument("trailing");
      }
    } catch (const std::exception&) {
      fail(ErrorCode::parse, std::string("bad ") + what + " entry \"" + item + "\"");
    }
  }
  if (out.empty()) fail(ErrorCode::parse, std::string("empty ") + what + " list");
  return out;
}

FieldPtr build_field(const FieldArgs& a) {
  if (a.modulus.empty()) return make_field(a.p, a.n);
  return make_field(FieldSpec{a.p, a.n, parse_list<Code>(a.modulus, "modulus")});
}

void add_field_options(CLI::App* sub, FieldArgs& fa, bool required = true) {
  auto* p = sub->add_option("--p", fa.p, "characteristic");
  auto* n = sub->add_option("--n", fa.n, "extension degree over F_p");
  if (required) {
    p->required();
    n->required();
  }
  sub->add_option("--modulus", fa.modulus,
                  "ascending monic modulus coefficients, e.g. 1,1,0,1 (default: smallest)");
}

Json error_json(const std::string& code, const std::string& message) {
  return {{"schema_version", kSchemaVersion}, {"error", {{"code", code}, {"message", message}}}};
}

Json bound_or_error(const std::function<BigInt()>& fn) {
  try {
    return integer_json(fn());
  } catch (const Error& e) {
    return {{"error", {{"code", to_string(e.code())}, {"message", e.what()}}}};
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::io, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::parse, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::io, "cannot write " + path);
  out << j.dump(2) << '\n';
}

struct Command {
  CLI::App* app = nullptr;
  std::function<Json()> action;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && args[0][0] != '-' &&
      std::find(kSubcommands.begin(), kSubcommands.end(), args[0]) == kSubcommands.end()) {
    out << error_json(std::string(to_string(ErrorCode::unknown_subcommand)),
                      "unknown subcommand \"" + args[0] + "\"")
               .dump(2)
        << '\n';
    return exit_status(ErrorCode::unknown_subcommand);
  }

  CLI::App app{"Artin-Schreier curves y^p - y = f(x) over F_{p^n}: counts, L-polynomials, "
               "bounds, trace codes and Walsh spectra",
               "ascurve"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ASCURVE_VERSION);

  Limits limits;
  app.add_option("--max-enum", limits.max_enum, "field enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-codewords", limits.max_codewords, "codeword enumeration budget")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", limits.threads, "partition cap")->check(CLI::Range(1, 256));
  app.add_option("--manifest", limits.manifest, "write a run manifest to this path");

  std::vector<Command> commands;
  Json field_used = nullptr;
  FieldArgs fa;
  std::string f_text;
  const auto curve = [&] {
    const FieldPtr F = build_field(fa);
    field_used = field_json(*F);
    return CurveInstance(F, parse_polynomial(*F, f_text));
  };
  const auto curve_json = [&](const CurveInstance& c) {
    return Json{{"field", field_json(*c.field())},
                {"f", format_polynomial(c.original())},
                {"reduced_f", format_polynomial(c.f())}};
  };

  // field
  std::optional<Code> a, b;
  {
    auto* sub = app.add_subcommand("field", "describe F_{p^n}, optionally with element arithmetic");
    add_field_options(sub, fa);
    sub->add_option("--a", a, "element code");
    sub->add_option("--b", b, "second element code");
    commands.push_back({sub, [&] {
                          const FieldPtr F = build_field(fa);
                          field_used = field_json(*F);
                          Json r = {{"field", field_used},
                                    {"describe", F->describe()},
                                    {"size", F->size()}};
                          if (a) {
                            FieldElement x(F, *a);
                            r["a"] = {{"code", *a},
                                      {"trace", x.trace()},
                                      {"frobenius", x.frobenius().code()},
                                      {"coordinates", F->coordinates(*a)}};
                            if (!x.is_zero()) r["a"]["inverse"] = x.inverse().code();
                            if (b) {
                              FieldElement y(F, *b);
                              r["b"] = *b;
                              r["sum"] = (x + y).code();
                              r["difference"] = (x - y).code();
                              r["product"] = (x * y).code();
                              if (!y.is_zero()) r["quotient"] = (x / y).code();
                            }
                          }
                          return r;
                        }});
  }
  // count-zeros
  {
    auto* sub = app.add_subcommand("count-zeros", "|Z_f| = #{x : Tr(f(x)) = 0}");
    add_field_options(sub, fa);
    sub->add_option("--f", f_text, "polynomial, e.g. \"x^5+3*x^2+1\"")->required();
    commands.push_back({sub, [&] {
                          const auto c = curve();
                          Json r = curve_json(c);
                          r["zeros"] = count_trace_zeros(c, limits.enum_options());
                          return r;
                        }});
  }
  // curve-points
  unsigned ext = 1;
  {
    auto* sub = app.add_subcommand("curve-points", "N_f over F_{q^i}, including the point at infinity");
    add_field_options(sub, fa);
    sub->add_option("--f", f_text, "polynomial")->required();
    sub->add_option("--ext", ext, "extension degree i")->check(CLI::PositiveNumber);
    commands.push_back({sub, [&] {
                          const auto c = curve();
                          Json r = curve_json(c);
                          r["extension_degree"] = ext;
                          r["points"] = integer_json(count_curve_points(c, ext, limits.enum_options()));
                          return r;
                        }});
  }
  // char-sum
  Code beta = 1;
  {
    auto* sub = app.add_subcommand("char-sum", "exact value counts and magnitude of sum chi_beta(f)");
    add_field_options(sub, fa);
    sub->add_option("--f", f_text, "polynomial")->required();
    sub->add_option("--beta", beta, "nonzero element code");
    commands.push_back({sub, [&] {
                          const auto c = curve();
                          Json r = curve_json(c);
                          r["distribution"] =
                              distribution_json(trace_value_distribution(c, beta, limits.enum_options()));
                          r["char_sum"] = char_sum_json(char_sum(c, beta, limits.enum_options()));
                          return r;
                        }});
  }
  // lpoly
  unsigned cross_check = 0;
  {
    auto* sub = app.add_subcommand("lpoly", "L-polynomial from exhaustive point counts");
    add_field_options(sub, fa);
    sub->add_option("--f", f_text, "polynomial")->required();
    sub->add_option("--cross-check", cross_check, "extra extensions counted and compared");
    commands.push_back({sub, [&] {
                          const auto c = curve();
                          const auto L = l_polynomial(c, limits.enum_options(), cross_check);
                          Json r = curve_json(c);
                          r["lpoly"] = lpoly_json(L);
                          r["weil_structure"] = structure_json(verify_weil_structure(L));
                          return r;
                        }});
  }
  // hasse-witt
  {
    auto* sub = app.add_subcommand("hasse-witt", "Hasse-Witt invariant from L-polynomial coefficients");
    add_field_options(sub, fa);
    sub->add_option("--f", f_text, "polynomial")->required();
    commands.push_back({sub, [&] {
                          const auto c = curve();
                          const auto L = l_polynomial(c, limits.enum_options());
                          Json r = curve_json(c);
                          r["lpoly"] = lpoly_json(L);
                          r["hasse_witt"] = hasse_witt_invariant(L, fa.p);
                          r["predicted"] = predicted_hasse_witt_artin_schreier(c);
                          if (L.g >= 1 && c.field()->absolute_degree() >= 3 &&
                              c.field()->absolute_degree() % 2 == 1) {
                            const auto v = check_a1_valuation(L, fa.p, c.field()->absolute_degree());
                            r["a1_valuation"] = {
                                {"required", rational_json(v.required)},
                                {"actual", v.actual ? Json(*v.actual) : Json("infinite")},
                                {"pass", v.pass}};
                          }
                          return r;
                        }});
  }
  // newton-polygon
  std::string coeffs_text;
  std::uint64_t prime = 0;
  {
    auto* sub = app.add_subcommand(
        "newton-polygon", "p-adic Newton polygon of given coefficients or of a curve's L-polynomial");
    add_field_options(sub, fa, false);
    sub->add_option("--f", f_text, "polynomial (curve mode)");
    sub->add_option("--coeffs", coeffs_text, "ascending integer coefficients, e.g. 2,0,1");
    sub->add_option("--prime", prime, "prime for --coeffs mode");
    commands.push_back({sub, [&] {
                          Json r;
                          NewtonPolygon np;
                          if (!coeffs_text.empty()) {
                            if (prime == 0) fail(ErrorCode::usage, "--coeffs needs --prime");
                            const auto coeffs = parse_list<BigInt>(coeffs_text, "coefficient");
                            np = build_polygon(coeffs, prime);
                          } else {
                            if (f_text.empty())
                              fail(ErrorCode::usage, "give --coeffs/--prime or --p/--n/--f");
                            const auto c = curve();
                            const auto L = l_polynomial(c, limits.enum_options());
                            r = curve_json(c);
                            r["lpoly"] = lpoly_json(L);
                            np = build_polygon(L.coeffs, fa.p);
                          }
                          r["polygon"] = polygon_json(np);
                          Json roots = Json::array();
                          for (const auto& rv : root_valuations(np))
                            roots.push_back({{"valuation", rational_json(rv.valuation)},
                                             {"multiplicity", rv.multiplicity}});
                          r["root_valuations"] = roots;
                          return r;
                        }});
  }
  // bounds
  BoundParams bp;
  {
    auto* sub = app.add_subcommand("bounds", "Weil, Weil-Serre, improved and character-sum bounds");
    sub->add_option("--p", bp.p, "characteristic")->required();
    sub->add_option("--n", bp.n, "q = p^n")->required();
    sub->add_option("--m", bp.m, "deg f")->required();
    commands.push_back({sub, [&] { return bound_report_json(compare_report(bp)); }});
  }
  // trace-code
  std::string kind = "trace", exponents_text, goppa_text, code_out;
  unsigned t = 0;
  bool all_one = false, compute_distance = false;
  {
    auto* sub = app.add_subcommand("trace-code", "build a trace code and optionally its exact distance");
    add_field_options(sub, fa);
    sub->add_option("--kind", kind, "trace | dual-bch | goppa")
        ->check(CLI::IsMember({"trace", "dual-bch", "goppa"}));
    sub->add_option("--t", t, "designed parameter t (dual-bch, goppa)");
    sub->add_option("--exponents", exponents_text, "monomial exponents for --kind trace, e.g. 1,3,5");
    sub->add_flag("--all-one", all_one, "prepend the all-one row (--kind trace)");
    sub->add_option("--goppa", goppa_text, "goppa polynomial (default: smallest rootless)");
    sub->add_flag("--distance", compute_distance, "compute the exact minimum distance");
    sub->add_option("--out", code_out, "write the code JSON to this path");
    commands.push_back({sub, [&] {
                          const FieldPtr F = build_field(fa);
                          field_used = field_json(*F);
                          const std::uint64_t p = F->characteristic();
                          const unsigned n = F->absolute_degree();
                          Json r = {{"field", field_used}, {"kind", kind}};
                          Json bounds = Json::object();
                          std::optional<LinearCode> code;
                          if (kind == "trace") {
                            const auto exps = parse_list<std::uint64_t>(exponents_text, "exponent");
                            std::vector<Code> points(enumerate(*F, limits.max_enum).begin(),
                                                     enumerate(*F, limits.max_enum).end());
                            code = build_trace_code(*F, points, basis_monomials(*F, exps), all_one);
                            const auto max_deg = *std::max_element(exps.begin(), exps.end());
                            bounds["zero_count"] =
                                bound_or_error([&] { return zero_count_distance_bound(p, n, max_deg); });
                          } else if (kind == "dual-bch") {
                            const auto built = dual_bch_with_allone(F, t);
                            code = built.code;
                            r["expected_dimension"] = built.expected_dimension;
                            r["dimension_guaranteed"] = built.dimension_guaranteed;
                            bounds["dual_bch"] =
                                bound_or_error([&] { return distance_bound_dual_bch(p, t, n); });
                          } else {
                            std::optional<Polynomial> g;
                            if (!goppa_text.empty()) g = parse_polynomial(*F, goppa_text);
                            const auto built = goppa_dual(F, t, g);
                            code = built.code;
                            r["expected_dimension"] = built.expected_dimension;
                            r["dimension_guaranteed"] = built.dimension_guaranteed;
                            r["goppa_polynomial"] = format_polynomial(*built.goppa_polynomial);
                            bounds["goppa_dual"] =
                                bound_or_error([&] { return distance_bound_goppa_dual(p, n, t); });
                            bounds["zero_count"] = bound_or_error(
                                [&] { return zero_count_distance_bound(p, n, 2 * t - 1); });
                          }
                          if (compute_distance) {
                            code->distance = DistanceInfo{
                                min_distance_exhaustive(*code, limits.distance_options()), true,
                                "exhaustive"};
                          } else {
                            for (const auto& [name, value] : bounds.items())
                              if (value.is_number_integer() && value.get<std::int64_t>() > 0) {
                                code->distance =
                                    DistanceInfo{value.get<std::uint64_t>(), false, name + "_bound"};
                                break;
                              }
                          }
                          r["bounds"] = bounds;
                          r["code"] = code_json(*code);
                          if (!code_out.empty()) write_json_file(code_out, r["code"]);
                          return r;
                        }});
  }
  // min-distance
  std::string code_path;
  bool distribution = false;
  {
    auto* sub = app.add_subcommand("min-distance", "exact minimum distance of a code JSON file");
    sub->add_option("--code", code_path, "code JSON as written by trace-code --out")->required();
    sub->add_flag("--distribution", distribution, "also report the weight distribution");
    commands.push_back({sub, [&] {
                          const auto code = code_from_json(read_json_file(code_path));
                          Json r = {{"p", code.p()}, {"N", code.length()}, {"k", code.dimension()}};
                          r["d"] = min_distance_exhaustive(code, limits.distance_options());
                          if (code.distance)
                            r["recorded"] = {{"d", code.distance->value},
                                             {"exact", code.distance->exact},
                                             {"provenance", code.distance->provenance}};
                          if (distribution)
                            r["weight_distribution"] =
                                weight_distribution(code, limits.distance_options());
                          return r;
                        }});
  }
  // walsh
  unsigned walsh_n = 0;
  {
    auto* sub = app.add_subcommand("walsh", "Walsh spectrum summary and nonlinearity over F_{2^n}");
    sub->add_option("--n", walsh_n, "field exponent")->required()->check(CLI::PositiveNumber);
    sub->add_option("--f", f_text, "polynomial")->required();
    commands.push_back({sub, [&] {
                          const FieldPtr F = make_field(2, walsh_n);
                          field_used = field_json(*F);
                          const CurveInstance c(F, parse_polynomial(*F, f_text));
                          const auto spectrum = walsh_spectrum(*F, c.original(), limits.enum_options());
                          Json r = curve_json(c);
                          const std::uint64_t m = c.degree() < 0 ? 0 : static_cast<std::uint64_t>(c.degree());
                          r["spectrum"] = spectrum_summary_json(spectrum, m);
                          return r;
                        }});
  }
  // verify-paper
  unsigned criterion = 0;
  bool suite_failed = false;
  {
    auto* sub = app.add_subcommand("verify-paper", "run the reference suite (exit 1 on any failure)");
    sub->add_option("--criterion", criterion, "run only this criterion (1-10)")
        ->check(CLI::Range(1u, kCriterionCount));
    commands.push_back({sub, [&] {
                          ReferenceOptions ro;
                          ro.threads = limits.threads;
                          std::vector<CriterionReport> reports;
                          if (criterion != 0)
                            reports.push_back(run_reference_check(criterion, ro));
                          else
                            reports = run_reference_checks(ro);
                          Json items = Json::array();
                          std::size_t passed = 0, failed = 0, divergent = 0;
                          for (const auto& rep : reports) {
                            items.push_back(criterion_json(rep));
                            (rep.status() == CheckStatus::pass ? passed : failed)++;
                            divergent += rep.count(CheckStatus::divergent);
                          }
                          suite_failed = failed > 0;
                          return Json{{"criteria", items},
                                      {"summary",
                                       {{"passed", passed},
                                        {"failed", failed},
                                        {"divergent_checks", divergent}}}};
                        }});
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, err, err);
      return 0;
    }
    out << error_json(std::string(to_string(ErrorCode::usage)), e.what()).dump(2) << '\n';
    return exit_status(ErrorCode::usage);
  }

  const auto chosen = std::find_if(commands.begin(), commands.end(),
                                   [](const Command& c) { return c.app->parsed(); });
  const auto start = std::chrono::steady_clock::now();
  try {
    Json result = chosen->action();
    const double wall =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    Json doc = {{"schema_version", kSchemaVersion},
                {"tool_version", ASCURVE_VERSION},
                {"command", chosen->app->get_name()},
                {"result", result}};
    out << doc.dump(2) << '\n';
    if (!limits.manifest.empty())
      write_json_file(limits.manifest, {{"schema_version", kSchemaVersion},
                                        {"tool_version", ASCURVE_VERSION},
                                        {"operation", chosen->app->get_name()},
                                        {"field", field_used},
                                        {"inputs", {{"argv", args}}},
                                        {"outputs", result},
                                        {"wall_time_seconds", wall}});
    return suite_failed ? 1 : 0;
  } catch (const CapacityError& e) {
    Json doc = error_json(std::string(to_string(e.code())), e.what());
    doc["error"]["required"] = integer_json(e.required());
    doc["error"]["budget"] = integer_json(e.budget());
    out << doc.dump(2) << '\n';
    return exit_status(e.code());
  } catch (const Error& e) {
    out << error_json(std::string(to_string(e.code())), e.what()).dump(2) << '\n';
    return exit_status(e.code());
  } catch (const std::exception& e) {
    out << error_json("internal_error", e.what()).dump(2) << '\n';
    return 10;
  }
}

}  // namespace ascurve::cli
