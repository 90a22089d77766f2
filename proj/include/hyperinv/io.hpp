#pragma once

#include <string>

#include <json.hpp>

#include "hyperinv/exact_poly.hpp"
#include "hyperinv/genfun.hpp"
#include "hyperinv/inversion.hpp"
#include "hyperinv/operators.hpp"

namespace hyperinv {

using Json = nlohmann::json;

Json to_json(Cx z);
Cx cx_from_json(const Json& j);

/// "re", "re+imj" / "re-imj", or "re,im"
Cx parse_cx(const std::string& text);

Json to_json(const Seq& s);
Seq seq_from_json(const Json& j);

/// {"n": ..., "entries": [[...row-major lower-triangular {"re","im"}...]]}
Json to_json(const TriMatrixNum& m);

/// entries as arrays of [deg_x, deg_nu, "p/q"] triples
Json to_json(const TriMatrixExact& m);

std::string tri_to_csv(const TriMatrixNum& m);

/// {"order": N, "coeffs": [{"re","im"}...], "convention": "exponential"}
Json to_json(const H0Series& f);
H0Series h0_from_json(const Json& j);

Json to_json(const PowerSeries& p);

}  // namespace hyperinv
