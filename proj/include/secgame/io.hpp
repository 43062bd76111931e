#pragma once

#include "secgame/model.hpp"

#include <json.hpp>

namespace secgame {

using Json = nlohmann::ordered_json;

/** Accepts a numeral string or a JSON integer; rejects floating-point literals. */
Rational rational_from_json(const Json& value, const std::string& where);
Json rational_to_json(const Rational& q);
Json vector_to_json(const VectorXr& v);
VectorXr vector_from_json(const Json& value, const std::string& where);
Json approx_vector(const VectorXr& v);

Json parse_json_text(std::string_view text);

SecurityGame game_from_json(const Json& doc, const ValidationOptions& options);
Json game_to_json(const SecurityGame& game);

MarginalProfile profile_from_json(const Json& doc);
Json profile_to_json(const MarginalProfile& profile);

Json report_to_json(const ValidationReport& report);

}   // namespace secgame
