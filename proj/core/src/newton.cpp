#include "ascurve/newton.hpp"

#include "ascurve/errors.hpp"

namespace ascurve {

namespace {

// > 0 when o -> a -> b turns counter-clockwise
BigInt cross(const PolygonPoint& o, const PolygonPoint& a, const PolygonPoint& b) {
  const BigInt ax = BigInt(a.index) - o.index, ay = BigInt(a.valuation) - BigInt(o.valuation);
  const BigInt bx = BigInt(b.index) - o.index, by = BigInt(b.valuation) - BigInt(o.valuation);
  return ax * by - ay * bx;
}

}  // namespace

NewtonPolygon build_polygon(std::span<const BigInt> coeffs, std::uint64_t p) {
  require(is_prime(p), "Newton polygon prime must be prime");
  require(!coeffs.empty() && coeffs.front() != 0, "constant coefficient must be nonzero");
  require(coeffs.back() != 0, "leading coefficient must be nonzero");

  NewtonPolygon np;
  np.prime = p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) np.points.push_back({i, valuation(coeffs[i], p)});

  // points arrive sorted by index; keep strictly convex (left) turns only
  for (const auto& pt : np.points) {
    while (np.vertices.size() >= 2 &&
           cross(np.vertices[np.vertices.size() - 2], np.vertices.back(), pt) <= 0)
      np.vertices.pop_back();
    np.vertices.push_back(pt);
  }
  for (std::size_t i = 1; i < np.vertices.size(); ++i) {
    const auto& a = np.vertices[i - 1];
    const auto& b = np.vertices[i];
    const std::uint64_t length = b.index - a.index;
    Rational slope(BigInt(b.valuation) - BigInt(a.valuation), BigInt(length));
    np.segments.push_back({slope, length});
  }
  return np;
}

std::vector<RootValuation> root_valuations(const NewtonPolygon& polygon) {
  std::vector<RootValuation> out;
  out.reserve(polygon.segments.size());
  for (const auto& seg : polygon.segments) out.push_back({-seg.slope, seg.length});
  return out;
}

ValuationCheck check_a1_valuation(const LPolynomial& L, std::uint64_t p, unsigned n) {
  require(L.g >= 1, "a_1 valuation check needs genus >= 1");
  require(n >= 3 && n % 2 == 1, "a_1 valuation check needs odd n >= 3");
  require(L.coeffs.size() >= 2, "L-polynomial has no a_1");
  ValuationCheck check;
  if (L.g == 1)
    check.required = Rational(n + 1, 2);
  else
    check.required = Rational((n + L.g - 1) / L.g);
  const BigInt& a1 = L.coeffs[1];
  if (a1 == 0) {
    check.pass = true;
    return check;
  }
  check.actual = valuation(a1, p);
  check.pass = Rational(*check.actual) >= check.required;
  return check;
}

}  // namespace ascurve
