#include <gtest/gtest.h>

#include "ascurve/errors.hpp"
#include "ascurve/serialize.hpp"

using namespace ascurve;

TEST(Serialize, Integers) {
  EXPECT_EQ(integer_json(BigInt(-42)), Json(-42));
  const BigInt big = ipow(BigInt(2), 100);
  EXPECT_EQ(integer_json(big), Json(big.str()));
  EXPECT_EQ(integer_from_json(integer_json(big)), big);
  EXPECT_THROW(integer_from_json(Json("12a")), Error);
  EXPECT_EQ(rational_json(Rational(6, 8)), Json("3/4"));
}

TEST(Serialize, FieldRoundTrip) {
  const auto F = make_field(5, 3);
  const Json j = field_json(*F);
  EXPECT_EQ(j.dump(), R"({"p":5,"n":3,"modulus":[1,1,0,1]})");
  EXPECT_TRUE(field_from_json(j)->same_field(*F));

  const auto T = extend_field(make_field(2, 2), 3);
  const Json t = field_json(*T);
  ASSERT_TRUE(t.contains("base"));
  EXPECT_TRUE(field_from_json(t)->same_field(*T));
  EXPECT_THROW(field_from_json(Json::object()), Error);
}

TEST(Serialize, PolynomialRoundTrip) {
  const auto F = make_field(2, 5);
  const auto f = parse_polynomial(*F, "x^5+3*x^3+x");
  const Json j = polynomial_json(f);
  EXPECT_EQ(j.dump(), "[[1,1],[3,3],[5,1]]");
  EXPECT_EQ(polynomial_from_json(*F, j), f);
  EXPECT_THROW(polynomial_from_json(*F, Json::parse("[[1]]")), Error);
}

TEST(Serialize, LPolynomialRoundTrip) {
  const LPolynomial L{32, 2, {1, 0, 0, 0, 1024}};
  const Json j = lpoly_json(L);
  EXPECT_EQ(j.dump(), R"({"q":32,"g":2,"coeffs":[1,0,0,0,1024]})");
  EXPECT_EQ(lpoly_from_json(j), L);
  EXPECT_THROW(lpoly_from_json(Json::parse(R"({"q":2,"coeffs":[1,0]})")), Error);
}

TEST(Serialize, PolygonForm) {
  const auto np = build_polygon(std::vector<BigInt>{2, 0, 1}, 2);
  EXPECT_EQ(polygon_json(np).dump(),
            R"({"prime":2,"vertices":[[0,1],[2,0]],"segments":[{"slope":"-1/2","length":2}]})");
}

TEST(Serialize, BoundReportFields) {
  const Json j = bound_report_json(compare_report({2, 7, 5}));
  EXPECT_EQ(j["weil_serre_Z"], 22);
  EXPECT_EQ(j["main_Z"], 16);
  EXPECT_EQ(j["char_sum_E"], "1/4");
  EXPECT_EQ(j["weil_Z"]["floor"], 22);
}

TEST(Serialize, CodeRoundTrip) {
  LinearCode code(3, 3, {{1, 2, 0}, {0, 1, 1}});
  code.distance = DistanceInfo{2, true, "exhaustive"};
  const Json j = code_json(code);
  EXPECT_EQ(j["k"], 2);
  EXPECT_EQ(j["d"], 2);
  const auto back = code_from_json(j);
  EXPECT_TRUE(back.same_code(code));
  ASSERT_TRUE(back.distance);
  EXPECT_EQ(back.distance->provenance, "exhaustive");
  EXPECT_THROW(code_from_json(Json::parse(R"({"p":3,"N":2})")), Error);
}

TEST(Serialize, SpectrumSummary) {
  const auto F = make_field(2, 5);
  const auto s = walsh_spectrum(*F, parse_polynomial(*F, "x^3"));
  const Json j = spectrum_summary_json(s, 3);
  EXPECT_EQ(j["max_abs_walsh"], 8);
  EXPECT_EQ(j["nonlinearity"], 12);
  EXPECT_EQ(j["bound_check"]["lower_ok"], true);
  EXPECT_EQ(j["bound_check"]["upper_ok"], true);
}
