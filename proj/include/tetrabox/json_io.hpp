#pragma once

#include "json.hpp"

#include "tetrabox/classify.hpp"
#include "tetrabox/flags.hpp"
#include "tetrabox/onsager.hpp"
#include "tetrabox/report.hpp"
#include "tetrabox/tetra.hpp"
#include "tetrabox/tridiagonal.hpp"

// JSON forms. Rationals are strings ("p/q" or "p"), matrices are arrays of
// rows. Every parse failure raises ParseError.
namespace tetrabox::jsonio {

using nlohmann::json;

json to_json(const Rational& q);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
json to_json(const Flag& f);
json to_json(const Decomposition& d);
json to_json(const ModuleSpec& s);
json to_json(const OnsagerModule& m);
json to_json(const TetraModule& t);
json to_json(const Report& r);
json to_json(const TdpReport& r);
json to_json(const EigenTable& t);
json to_json(const EquivalenceKey& k);

Rational rational_from_json(const json& j);
Matrix matrix_from_json(const json& j);
ModuleSpec spec_from_json(const json& j);
OnsagerModule onsager_from_json(const json& j);
TetraModule tetra_from_json(const json& j);

/// Parses text, mapping syntax errors to ParseError.
json parse(const std::string& text);

}  // namespace tetrabox::jsonio
