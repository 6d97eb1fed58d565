// JSON forms of the library's values and reports.
//
// Rationals and big integers are strings ("p/q" or "p"); polynomials are
// {variable, content, coefficients} with the primitive integer coefficients in
// ascending order.

#pragma once

#include "json.hpp"
#include "quadpre/dynamics.hpp"
#include "quadpre/factor.hpp"
#include "quadpre/geometry.hpp"
#include "quadpre/heights.hpp"
#include "quadpre/orbit.hpp"
#include "quadpre/strata.hpp"

namespace quadpre {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const UniPoly& p);
Json to_json(const Factorization& f);
Json to_json(const BiPoly& p);
Json to_json(const IdentityRecord& r);
Json to_json(const CriticalStratum& s);
Json to_json(const NewtonPolygon& np);
Json to_json(const GenusReport& g);
Json to_json(const QuarterGenera& q);
Json to_json(const HeightReport& h);
Json to_json(const PreperiodicReport& p);
Json to_json(const PreimageSet& s);
Json to_json(const CurvePoint& p);

/// Inverse of to_json(UniPoly); throws std::invalid_argument on bad input.
UniPoly poly_from_json(const Json& j);

}  // namespace quadpre
