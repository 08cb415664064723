#pragma once

// JSON wire forms.  Integers that fit in 64 bits are JSON numbers, larger
// ones decimal strings; rationals are "num/den" strings.

#include <nlohmann/json.hpp>

#include "ascurve/bigint.hpp"
#include "ascurve/bounds.hpp"
#include "ascurve/codes.hpp"
#include "ascurve/counting.hpp"
#include "ascurve/field.hpp"
#include "ascurve/lpoly.hpp"
#include "ascurve/newton.hpp"
#include "ascurve/polynomial.hpp"
#include "ascurve/walsh.hpp"

namespace ascurve {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json integer_json(const BigInt& value);
BigInt integer_from_json(const Json& j);
Json rational_json(const Rational& value);

/// {"p", "n", "modulus"} for fields over F_p; towers nest the base as
/// {"base": ..., "degree", "modulus"}.
Json field_json(const FiniteField& field);
FieldPtr field_from_json(const Json& j);

/// [[exponent, coeff], ...] ascending.
Json polynomial_json(const Polynomial& f);
Polynomial polynomial_from_json(const FiniteField& field, const Json& j);

/// {"beta", "counts": {"0": .., "1": ..}}.
Json distribution_json(const TraceDistribution& d);
Json char_sum_json(const CharacterSum& s);

Json lpoly_json(const LPolynomial& L);
LPolynomial lpoly_from_json(const Json& j);
Json structure_json(const WeilStructureReport& report);

/// {"prime", "vertices": [[i, v], ...], "segments": [{"slope", "length"}]}.
Json polygon_json(const NewtonPolygon& polygon);
Json surd_json(const SurdValue& s);
Json bound_report_json(const BoundReport& r);

/// {"p", "N", "k", "d", "bound_provenance", "rows"}; "d" is null when unknown.
Json code_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);

/// {"n", "m", "max_abs_walsh", "nonlinearity", "bound_check"}.
Json spectrum_summary_json(const WalshSpectrum& spectrum, std::uint64_t m);

}  // namespace ascurve
