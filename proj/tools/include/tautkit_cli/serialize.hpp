#pragma once

// JSON encoding of tautkit values. Big integers and rationals are written as
// decimal strings ("-4", "1/2"); matrices as row-major arrays of strings.

#include "json.hpp"
#include "tautkit/holonomy.hpp"
#include "tautkit/norm_ball.hpp"
#include "tautkit/penner.hpp"
#include "tautkit/sutured.hpp"

#include <string>
#include <utility>

namespace tautkit::cli {

using json = nlohmann::json;

json to_json(const Integer& v);
json to_json(const Rational& v);
json to_json(const IntVector& v);
json to_json(const RatVector& v);
json to_json(const IntMatrix& m);
json to_json(const RatPolytope& p);
json to_json(const NormSpec& s);
json to_json(const CandidatePoint& p);
json to_json(const PennerReport& r);
json to_json(const NovikovWitness& w);
json to_json(const PLHomeo& f);
json to_json(const ConjugacyWitness& w);
json to_json(const CurveSystem& sys, const TwistWord& word);

// Parsers throw InputError with the offending field path in the message.
IntMatrix int_matrix_from_json(const json& j, const std::string& path = "$");
NormSpec norm_spec_from_json(const json& j, const std::string& path = "$");
TangencyList tangencies_from_json(const json& j, const std::string& path = "$");
PLHomeo pl_homeo_from_json(const json& j, const std::string& path = "$");
std::pair<CurveSystem, TwistWord> penner_input_from_json(const json& j, const std::string& path = "$");

/// Parses text as JSON, turning syntax errors into InputError that carry the
/// parser's line/column message.
json parse_json_text(const std::string& text, const std::string& source);
json read_json_file(const std::string& path);

}  // namespace tautkit::cli
