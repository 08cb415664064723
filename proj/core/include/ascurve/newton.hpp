#pragma once

// p-adic Newton polygons of integer polynomials.
//
// Sign convention: a segment of slope -k and horizontal length l accounts
// for exactly l roots of p-adic valuation k.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ascurve/bigint.hpp"
#include "ascurve/lpoly.hpp"

namespace ascurve {

struct PolygonPoint {
  std::uint64_t index = 0;
  std::uint64_t valuation = 0;
  bool operator==(const PolygonPoint&) const = default;
};

struct PolygonSegment {
  Rational slope;
  std::uint64_t length = 0;
  bool operator==(const PolygonSegment&) const = default;
};

struct NewtonPolygon {
  std::uint64_t prime = 2;
  std::vector<PolygonPoint> points;    // (i, v_p(u_i)) for nonzero u_i
  std::vector<PolygonPoint> vertices;  // extreme points of the lower hull
  std::vector<PolygonSegment> segments;
};

/// Lower convex hull of (i, v_p(u_i)) by a monotone-chain sweep; zero
/// interior coefficients are skipped and collinear points are merged.
/// `coeffs` are ascending; u_0 and the leading coefficient must be nonzero.
NewtonPolygon build_polygon(std::span<const BigInt> coeffs, std::uint64_t p);

struct RootValuation {
  Rational valuation;
  std::uint64_t multiplicity = 0;
  bool operator==(const RootValuation&) const = default;
};

/// One entry (k, l) per segment of slope -k and length l.
std::vector<RootValuation> root_valuations(const NewtonPolygon& polygon);

struct ValuationCheck {
  Rational required;
  std::optional<std::uint64_t> actual;  // nullopt: a_1 = 0, infinite valuation
  bool pass = false;
};

/// v_p(a_1) against ceil(n/g) (g > 1) or (n + 1)/2 (g = 1).  Requires odd
/// n >= 3 and g >= 1.
ValuationCheck check_a1_valuation(const LPolynomial& L, std::uint64_t p, unsigned n);

}  // namespace ascurve
