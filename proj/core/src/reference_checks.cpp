#include "ascurve/reference_checks.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>

#include "ascurve/errors.hpp"

namespace ascurve {

namespace {

std::string str(const BigInt& x) { return x.str(); }
std::string str(std::uint64_t x) { return std::to_string(x); }
std::string str(const std::vector<BigInt>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + "]";
}

class Recorder {
 public:
  explicit Recorder(CriterionReport& report) : report_(report) {}

  template <class A, class B>
  void equal(std::string key, const A& expected, const B& actual, std::string note = {}) {
    const bool ok = expected == actual;
    add(std::move(key), ok, str(expected), str(actual), std::move(note));
  }

  void add(std::string key, bool ok, std::string expected, std::string actual,
           std::string note = {}) {
    report_.checks.push_back({std::move(key), ok ? CheckStatus::pass : CheckStatus::fail,
                              std::move(expected), std::move(actual), std::move(note)});
  }

  void divergent(std::string key, std::string expected, std::string actual, std::string note) {
    report_.checks.push_back(
        {std::move(key), CheckStatus::divergent, std::move(expected), std::move(actual),
         std::move(note)});
  }

 private:
  CriterionReport& report_;
};

Polynomial poly(const FiniteField& field, std::vector<Term> terms) {
  return Polynomial::from_terms(field, std::move(terms));
}

void bound_arithmetic(Recorder& rec) {
  const auto r1 = compare_report({2, 7, 5});
  rec.equal("bounds.p2_n7_m5.weil_serre_Z", BigInt(22), r1.weil_serre_Z);
  rec.equal("bounds.p2_n7_m5.main_Z", BigInt(16), r1.main_Z);
  const auto r2 = compare_report({2, 21, 5});
  rec.equal("bounds.p2_n21_m5.weil_serre_Z", BigInt(2896), r2.weil_serre_Z);
  rec.equal("bounds.p2_n21_m5.main_Z", BigInt(2048), r2.main_Z);
  const BoundParams large{2, 5, 2001};
  rec.equal("bounds.q32_m2001.weil_N_floor", BigInt(11313), weil_bounds(large).points.floor());
  rec.equal("bounds.q32_m2001.weil_serre_N", BigInt(11000), weil_serre_bounds(large).points);
}

void genus_divergence(Recorder& rec) {
  const auto r = compare_report({3, 5, 5});
  rec.equal("bounds.p3_n5_m5.weil_serre_Z", BigInt(41), r.weil_serre_Z, "g = 4 from m = 5");
  rec.equal("bounds.p3_n5_m5.main_Z", BigInt(39), r.main_Z, "g = 4 from m = 5");
  const BigInt ws_g2 = (2 * floor_two_sqrt(r.q)) / 3;
  const BigInt main_g2 = improved_deviation_for_genus(3, 5, 2);
  const bool reproduces_with_g2 = ws_g2 == 20 && main_g2 == 18;
  const std::string actual = r.weil_serre_Z.str() + "/" + r.main_Z.str();
  if (reproduces_with_g2)
    rec.divergent("bounds.p3_n5_m5.published_20_18", "20/18", actual,
                  "non-reproducing: (m-1)(p-1)/2 = 4 for m = 5, p = 3; 20/18 is the g = 2 "
                  "evaluation (weil_serre_Z " + ws_g2.str() + ", main_Z " + main_g2.str() + ")");
  else
    rec.add("bounds.p3_n5_m5.published_20_18", false, "20/18 at g = 2",
            ws_g2.str() + "/" + main_g2.str(), "g = 2 diagnosis did not reproduce");
}

void family_soundness(Recorder& rec, const ReferenceOptions& opts) {
  const FieldPtr F = make_field(2, 5);
  const BigInt bound = main_bound({2, 5, 5});
  rec.equal("family.x5_ax3_bx.main_bound", BigInt(8), bound);
  const std::uint64_t divisor = std::uint64_t{1} << walsh_divisibility_exponent(5, 5);
  std::uint64_t bound_violations = 0, divisibility_violations = 0, members = 0;
  std::int64_t worst = 0;
  EnumOptions eo;
  eo.threads = opts.threads;
  for (Code a = 0; a < 32; ++a)
    for (Code b = 0; b < 32; ++b) {
      const auto f = poly(*F, {{5, 1}, {3, a}, {1, b}});
      const auto z = static_cast<std::int64_t>(count_trace_zeros(*F, f, eo));
      const std::int64_t dev = std::llabs(z - 16);
      worst = std::max(worst, dev);
      if (BigInt(dev) > bound) ++bound_violations;
      const std::int64_t n_minus = 1 + 2 * z - 33;
      if (n_minus % static_cast<std::int64_t>(divisor) != 0) ++divisibility_violations;
      ++members;
    }
  rec.equal("family.x5_ax3_bx.members", std::uint64_t{1024}, members);
  rec.add("family.x5_ax3_bx.deviation_within_bound", bound_violations == 0, "0 violations",
          std::to_string(bound_violations) + " violations",
          "max ||Z_f| - 16| = " + std::to_string(worst));
  rec.add("family.x5_ax3_bx.divisibility", divisibility_violations == 0,
          std::to_string(divisor) + " | N_f - 33", std::to_string(divisibility_violations) +
                                                       " violations");
}

void lpoly_pipeline(Recorder& rec, const ReferenceOptions& opts) {
  EnumOptions eo;
  eo.threads = opts.threads;
  const FieldPtr F2 = make_field(2, 1);
  const CurveInstance elliptic(F2, poly(*F2, {{3, 1}}));
  rec.equal("lpoly.y2_y_x3_over_F2.N1", BigInt(3), count_curve_points(elliptic, 1, eo));
  rec.equal("lpoly.y2_y_x3_over_F2.N2", BigInt(9), count_curve_points(elliptic, 2, eo));
  const auto L1 = l_polynomial(elliptic, eo, 1);
  rec.equal("lpoly.y2_y_x3_over_F2.coeffs", std::vector<BigInt>{1, 0, 2}, L1.coeffs);

  const FieldPtr F32 = make_field(2, 5);
  const CurveInstance curve(F32, poly(*F32, {{5, 1}}));
  const auto L = l_polynomial(curve, eo);
  rec.equal("lpoly.y2_y_x5_over_F32.coeffs", std::vector<BigInt>{1, 0, 0, 0, 1024}, L.coeffs);
  const auto structure = verify_weil_structure(L);
  rec.add("lpoly.y2_y_x5_over_F32.weil_structure", structure.all_pass(), "all pass",
          structure.all_pass() ? "all pass" : "failed");
  rec.equal("lpoly.y2_y_x5_over_F32.hasse_witt", std::uint64_t{0},
            std::uint64_t{hasse_witt_invariant(L, 2)});
  rec.equal("lpoly.y2_y_x5_over_F32.hasse_witt_predicted", std::uint64_t{0},
            std::uint64_t{predicted_hasse_witt_artin_schreier(curve)});
  const auto v = check_a1_valuation(L, 2, 5);
  rec.add("lpoly.y2_y_x5_over_F32.a1_valuation", v.pass,
          ">= " + to_fraction_string(v.required),
          v.actual ? std::to_string(*v.actual) : std::string("infinite (a_1 = 0)"));
}

// Lower hull value at integer x by minimizing over all chords through x.
Rational hull_value_oracle(const std::vector<PolygonPoint>& pts, std::uint64_t x) {
  std::optional<Rational> best;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      if (a.index > x || b.index < x) continue;
      Rational value(static_cast<long long>(a.valuation));
      if (b.index != a.index)
        value += Rational(BigInt(b.valuation) - BigInt(a.valuation), BigInt(b.index - a.index)) *
                 static_cast<long long>(x - a.index);
      if (!best || value < *best) best = value;
    }
  return *best;
}

bool polygon_matches_oracle(const NewtonPolygon& np, std::uint64_t degree) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < np.segments.size(); ++i) {
    total += np.segments[i].length;
    if (i > 0 && !(np.segments[i - 1].slope < np.segments[i].slope)) return false;
  }
  if (total != degree) return false;
  for (std::uint64_t x = 0; x <= degree; ++x) {
    auto it = std::upper_bound(np.vertices.begin(), np.vertices.end(), x,
                               [](std::uint64_t v, const PolygonPoint& p) { return v < p.index; });
    Rational value;
    if (it == np.vertices.begin()) return false;
    const auto& a = *(it - 1);
    if (it == np.vertices.end()) {
      if (a.index != x) return false;
      value = Rational(static_cast<long long>(a.valuation));
    } else {
      const auto& b = *it;
      value = Rational(static_cast<long long>(a.valuation)) +
              Rational(BigInt(b.valuation) - BigInt(a.valuation), BigInt(b.index - a.index)) *
                  static_cast<long long>(x - a.index);
    }
    if (value != hull_value_oracle(np.points, x)) return false;
  }
  return true;
}

std::string slopes(const NewtonPolygon& np) {
  std::string out = "[";
  for (std::size_t i = 0; i < np.segments.size(); ++i)
    out += (i ? "," : "") + to_fraction_string(np.segments[i].slope) + "x" +
           std::to_string(np.segments[i].length);
  return out + "]";
}

void newton_polygons(Recorder& rec, const ReferenceOptions& opts) {
  const std::vector<BigInt> unit{1, 1, 1};
  const auto np1 = build_polygon(unit, 2);
  rec.add("newton.unit_coefficients", slopes(np1) == "[0/1x2]", "[0/1x2]", slopes(np1));
  const std::vector<BigInt> t2_plus_2{2, 0, 1};
  const auto np2 = build_polygon(t2_plus_2, 2);
  rec.add("newton.t2_plus_2_p2", slopes(np2) == "[-1/2x2]", "[-1/2x2]", slopes(np2));
  const std::vector<BigInt> product{3, -4, 1};  // (T - 3)(T - 1)
  const auto np3 = build_polygon(product, 3);
  rec.add("newton.t_minus_p_times_t_minus_1_p3", slopes(np3) == "[-1/1x1,0/1x1]",
          "[-1/1x1,0/1x1]", slopes(np3));

  std::mt19937_64 rng(opts.seed);
  const std::uint64_t primes[] = {2, 3, 5, 7};
  std::uint64_t mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t degree = 1 + rng() % 12;
    std::vector<BigInt> coeffs(degree + 1);
    for (auto& c : coeffs) {
      // mix in high powers of small primes so the hull has structure
      const std::int64_t base = static_cast<std::int64_t>(rng() % 2001) - 1000;
      c = BigInt(base) * ipow(BigInt(primes[rng() % 4]), rng() % 8);
      if (rng() % 4 == 0) c = 0;
    }
    if (coeffs.front() == 0) coeffs.front() = 1;
    if (coeffs.back() == 0) coeffs.back() = -1;
    const auto np = build_polygon(coeffs, primes[rng() % 4]);
    if (!polygon_matches_oracle(np, degree)) ++mismatches;
  }
  rec.add("newton.random_hulls_vs_chord_oracle", mismatches == 0, "0 mismatches of 1000",
          std::to_string(mismatches) + " mismatches of 1000");
}

void example_code(Recorder& rec, const ReferenceOptions& opts) {
  const FieldPtr F = make_field(2, 7);
  const std::vector<std::uint64_t> exponents{1, 3, 5};
  const auto gens = basis_monomials(*F, exponents);
  std::vector<Code> points(F->size());
  for (Code x = 0; x < F->size(); ++x) points[x] = x;
  const auto code = build_trace_code(*F, points, gens, true);
  rec.equal("codes.f128_deg5.dimension", std::uint64_t{22}, std::uint64_t{code.dimension()});
  DistanceOptions d_opts;
  d_opts.threads = opts.threads;
  const std::uint64_t d = min_distance_exhaustive(code, d_opts);
  rec.equal("codes.f128_deg5.min_distance", std::uint64_t{48}, d);
  const BigInt bound = zero_count_distance_bound(2, 7, 5);
  rec.equal("codes.f128_deg5.bound_128_minus_64_minus_16", BigInt(48), bound);
  rec.add("codes.f128_deg5.distance_meets_bound", BigInt(d) >= bound, ">= " + bound.str(),
          std::to_string(d));
}

void dual_bch_codes(Recorder& rec, const ReferenceOptions& opts) {
  DistanceOptions d_opts;
  d_opts.threads = opts.threads;
  struct Case {
    std::uint32_t p;
    unsigned t, n;
    std::uint64_t length, dim, bound;
  };
  for (const Case c : {Case{2, 4, 5, 31, 11, 11}, Case{3, 3, 3, 26, 7, 14}}) {
    const std::string key = "codes.dual_bch_p" + std::to_string(c.p) + "_t" + std::to_string(c.t) +
                            "_n" + std::to_string(c.n);
    const auto built = dual_bch_with_allone(c.p, c.t, c.n);
    rec.equal(key + ".length", c.length, std::uint64_t{built.code.length()});
    rec.equal(key + ".dimension", c.dim, std::uint64_t{built.code.dimension()});
    const BigInt bound = distance_bound_dual_bch(c.p, c.t, c.n);
    rec.equal(key + ".bound", BigInt(c.bound), bound);
    const std::uint64_t d = min_distance_exhaustive(built.code, d_opts);
    rec.add(key + ".distance_meets_bound", BigInt(d) >= bound, ">= " + bound.str(),
            std::to_string(d));
  }
}

void goppa_code(Recorder& rec, const ReferenceOptions& opts) {
  const auto built = goppa_dual(5, 3, 2);
  rec.equal("codes.goppa_dual_p5_n3_t2.dimension", std::uint64_t{7},
            std::uint64_t{built.code.dimension()},
            "goppa polynomial " + format_polynomial(*built.goppa_polynomial));
  DistanceOptions d_opts;
  d_opts.threads = opts.threads;
  const std::uint64_t d = min_distance_exhaustive(built.code, d_opts);
  rec.add("codes.goppa_dual_p5_n3_t2.exact_distance", true, "computed", std::to_string(d),
          "over all 5^7 codewords");
  const BigInt derived = zero_count_distance_bound(5, 3, 3);
  rec.equal("codes.goppa_dual_p5_n3_t2.derived_bound", BigInt(83), derived,
            "q - q/p - main_bound(5,3,3); codewords Tr(v f) + c have degree <= 3");
  rec.add("codes.goppa_dual_p5_n3_t2.distance_meets_83", BigInt(d) >= derived,
          ">= " + derived.str(), std::to_string(d));
  bool rejected = false;
  try {
    distance_bound_goppa_dual(5, 3, 2);
  } catch (const Error&) {
    rejected = true;
  }
  const BigInt g2_value = BigInt(125) - 25 - improved_deviation_for_genus(5, 3, 2);
  const std::string note = std::string("unproven: the genus formula gives g = 0 at t = 2") +
                           (rejected ? " and the bound is rejected" : "") +
                           "; the g = 2 evaluation gives " + g2_value.str();
  if (d >= 95)
    rec.add("codes.goppa_dual_p5_n3_t2.claimed_95", true, ">= 95", std::to_string(d), note);
  else
    rec.divergent("codes.goppa_dual_p5_n3_t2.claimed_95", ">= 95", std::to_string(d),
                  note + "; exact distance is below the claim");
}

std::int64_t walsh_direct(const FiniteField& F, const Polynomial& f, Code a, Code b) {
  std::int64_t sum = 0;
  for (Code x = 0; x < F.size(); ++x) {
    const std::uint32_t e = F.trace(F.mul(a, f.evaluate(F, x))) ^ F.trace(F.mul(b, x));
    sum += e ? -1 : 1;
  }
  return sum;
}

void walsh_suite(Recorder& rec, const ReferenceOptions& opts) {
  EnumOptions eo;
  eo.threads = opts.threads;
  const FieldPtr F32 = make_field(2, 5), F128 = make_field(2, 7), F8 = make_field(2, 3);
  rec.equal("walsh.x3_f32.nonlinearity", std::uint64_t{12},
            nonlinearity(*F32, poly(*F32, {{3, 1}}), eo));
  rec.equal("walsh.x3_f128.nonlinearity", std::uint64_t{56},
            nonlinearity(*F128, poly(*F128, {{3, 1}}), eo));
  rec.equal("walsh.nl_upper_bound_7", std::uint64_t{56}, nl_upper_bound(7));
  rec.equal("walsh.nl_lower_bound_7_5", std::uint64_t{48}, nl_lower_bound_from_theorem(7, 5));

  std::mt19937_64 rng(opts.seed);
  std::uint64_t over_32 = 0, below_48 = 0, above_56 = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Term> terms{{5, 1 + rng() % 127}};
    for (std::uint64_t e = 0; e < 5; ++e) terms.push_back({e, rng() % 128});
    const auto spectrum = walsh_spectrum(*F128, poly(*F128, terms), eo);
    const std::uint64_t nl = nonlinearity(spectrum);
    over_32 += spectrum.max_abs > 32;
    below_48 += nl < 48;
    above_56 += nl > 56;
    ++histogram[nl];
  }
  std::string hist;
  for (const auto& [nl, count] : histogram)
    hist += (hist.empty() ? "" : ", ") + std::to_string(nl) + ": " + std::to_string(count);
  rec.add("walsh.random_deg5_f128.max_abs_le_32", over_32 == 0, "0 of 100 above 32",
          std::to_string(over_32) + " of 100 above 32");
  rec.add("walsh.random_deg5_f128.nl_ge_48", below_48 == 0, "0 of 100 below 48",
          std::to_string(below_48) + " of 100 below 48", "nonlinearity histogram {" + hist + "}");
  rec.add("walsh.random_deg5_f128.nl_le_56", above_56 == 0, "0 of 100 above 56",
          std::to_string(above_56) + " of 100 above 56");

  // every f of degree <= 3 over F_8
  std::uint64_t mismatches = 0, functions = 0;
  for (Code c0 = 0; c0 < 8; ++c0)
    for (Code c1 = 0; c1 < 8; ++c1)
      for (Code c2 = 0; c2 < 8; ++c2)
        for (Code c3 = 0; c3 < 8; ++c3) {
          const auto f = poly(*F8, {{0, c0}, {1, c1}, {2, c2}, {3, c3}});
          const auto spectrum = walsh_spectrum(*F8, f, eo);
          for (Code a = 1; a < 8; ++a)
            for (Code b = 0; b < 8; ++b)
              if (spectrum.at(a, b) != walsh_direct(*F8, f, a, b)) ++mismatches;
          ++functions;
        }
  rec.add("walsh.fast_vs_direct_f8_deg_le_3", mismatches == 0, "0 mismatches",
          std::to_string(mismatches) + " mismatches over " + std::to_string(functions) +
              " functions");
}

std::uint64_t affine_points_by_pairs(const FiniteField& F, const Polynomial& f) {
  std::map<Code, std::uint64_t> fiber;
  for (Code y = 0; y < F.size(); ++y) ++fiber[F.sub(F.pow(y, F.characteristic()), y)];
  std::uint64_t total = 0;
  for (Code x = 0; x < F.size(); ++x) {
    const auto it = fiber.find(f.evaluate(F, x));
    if (it != fiber.end()) total += it->second;
  }
  return total;
}

void consistency(Recorder& rec, const ReferenceOptions& opts) {
  EnumOptions eo;
  eo.threads = opts.threads;
  struct Instance {
    std::uint32_t p;
    unsigned n;
    std::vector<Term> terms;
  };
  const std::vector<Instance> instances{
      {2, 5, {{5, 1}, {3, 1}, {1, 1}}},
      {3, 3, {{4, 1}, {2, 2}, {1, 1}}},
      {5, 3, {{3, 1}, {1, 1}}},
      {7, 2, {{5, 1}, {1, 3}}},
      {2, 7, {{7, 3}, {6, 1}, {1, 5}}},
  };
  std::uint64_t bad_counts = 0;
  for (const auto& inst : instances) {
    const FieldPtr F = make_field(inst.p, inst.n);
    const CurveInstance curve(F, poly(*F, inst.terms));
    const BigInt N = count_curve_points(curve, 1, eo);
    const std::uint64_t Z = count_trace_zeros(curve, eo);
    const std::uint64_t pairs = affine_points_by_pairs(*F, curve.original());
    if (N != BigInt(pairs) + 1 || (N - 1) / inst.p != Z || (N - 1) % inst.p != 0) ++bad_counts;
  }
  rec.add("consistency.zeros_equal_points_minus_one_over_p", bad_counts == 0,
          "0 of " + std::to_string(instances.size()) + " instances differ",
          std::to_string(bad_counts) + " differ", "points counted independently as (x, y) pairs");

  std::mt19937_64 rng(opts.seed);
  const std::vector<std::pair<std::uint32_t, unsigned>> fields{
      {2, 16}, {3, 10}, {5, 6}, {7, 5}, {11, 4}, {2, 9}};
  std::uint64_t reduction_mismatches = 0, points_checked = 0;
  for (const auto& [p, n] : fields) {
    const FieldPtr F = make_field(p, n);
    const std::vector<std::uint64_t> exps{p, std::uint64_t{p} * p, 3ULL * p, p + 1ULL, 2,
                                          std::uint64_t{p} * p * p + 1};
    std::vector<Term> terms;
    for (auto e : exps) terms.push_back({e, 1 + rng() % (F->size() - 1)});
    const auto f = poly(*F, terms);
    const auto r = reduce_trace_form(*F, f);
    const PolynomialEvaluator ef(*F, f), er(*F, r);
    for (Code x = 0; x < F->size(); ++x, ++points_checked)
      if (F->trace(ef(x)) != F->trace(er(x))) ++reduction_mismatches;
  }
  rec.add("consistency.trace_form_reduction", reduction_mismatches == 0, "0 mismatches",
          std::to_string(reduction_mismatches) + " mismatches over " +
              std::to_string(points_checked) + " points");

  const FieldPtr F32 = make_field(2, 5);
  std::uint64_t shift_mismatches = 0;
  for (const auto& terms : std::vector<std::vector<Term>>{
           {{3, 1}}, {{5, 1}, {3, 7}, {1, 2}}, {{7, 9}, {2, 1}}, {{9, 3}, {5, 1}, {0, 4}}}) {
    const CurveInstance curve(F32, poly(*F32, terms));
    for (Code beta = 1; beta < 32; ++beta) {
      const auto dist = trace_value_distribution(curve, beta, eo);
      for (std::uint32_t a = 0; a < 2; ++a) {
        const Code gamma = smallest_element_with_trace(*F32, a);
        const auto shifted = curve.original().scaled(*F32, beta).minus_constant(*F32, gamma);
        if (count_trace_zeros(*F32, shifted, eo) != dist.counts[a]) ++shift_mismatches;
      }
    }
  }
  rec.add("consistency.value_count_equals_shifted_zero_count", shift_mismatches == 0,
          "0 mismatches", std::to_string(shift_mismatches) + " mismatches");
}

struct CriterionDef {
  const char* title;
  double limit;
  void (*run)(Recorder&, const ReferenceOptions&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"bound arithmetic", 1, [](Recorder& r, const ReferenceOptions&) { bound_arithmetic(r); }},
    {"genus divergence in the p = 3 bound example", 1,
     [](Recorder& r, const ReferenceOptions&) { genus_divergence(r); }},
    {"improved bound soundness on x^5 + a x^3 + b x over F_32", 10, family_soundness},
    {"L-polynomial pipeline", 30, lpoly_pipeline},
    {"Newton polygons", 5, newton_polygons},
    {"trace code over F_128 with deg f <= 5", 120, example_code},
    {"dual BCH codes C_2(4,5) and C_3(3,3)", 10, dual_bch_codes},
    {"Goppa dual over F_125 with t = 2", 30, goppa_code},
    {"Walsh spectra and nonlinearity", 60, walsh_suite},
    {"cross-operation consistency", 30, consistency},
};

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::divergent:
      return "divergent";
  }
  return "fail";
}

std::size_t CriterionReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const SubCheck& c) { return c.status == s; }));
}

CheckStatus CriterionReport::status() const {
  if (checks.empty() || count(CheckStatus::fail) > 0 || seconds > limit_seconds)
    return CheckStatus::fail;
  return CheckStatus::pass;
}

CriterionReport run_reference_check(unsigned id, const ReferenceOptions& opts) {
  require(id >= 1 && id <= kCriterionCount, "criterion id must be in 1.." +
                                                std::to_string(kCriterionCount));
  const CriterionDef& def = kCriteria[id - 1];
  CriterionReport report;
  report.id = id;
  report.title = def.title;
  report.limit_seconds = def.limit;
  Recorder rec(report);
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(rec, opts);
  } catch (const std::exception& e) {
    rec.add("exception", false, "no error", e.what());
  }
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<CriterionReport> run_reference_checks(const ReferenceOptions& opts) {
  std::vector<CriterionReport> out;
  for (unsigned id = 1; id <= kCriterionCount; ++id) out.push_back(run_reference_check(id, opts));
  return out;
}

Json criterion_json(const CriterionReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json item = {{"key", c.key},
                 {"status", to_string(c.status)},
                 {"expected", c.expected},
                 {"actual", c.actual}};
    if (!c.note.empty()) item["note"] = c.note;
    checks.push_back(item);
  }
  return {{"id", report.id},
          {"title", report.title},
          {"status", to_string(report.status())},
          {"seconds_approx", report.seconds},
          {"limit_seconds", report.limit_seconds},
          {"checks", checks}};
}

}  // namespace ascurve
