#include "secgame/io.hpp"

namespace secgame {

Rational rational_from_json(const Json& value, const std::string& where)
{
    if (value.is_string()) {
        try {
            return parse_rational(value.get<std::string>());
        } catch (const InputError& e) {
            throw InputError(where + ": " + e.what());
        }
    }
    if (value.is_number_integer()) return Rational(value.dump());
    if (value.is_number_float())
        throw InputError(where + ": floating-point literal; write numerals as decimal or \"p/q\" strings");
    throw InputError("schema violation: " + where + " must be a numeral");
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Json vector_to_json(const VectorXr& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(format_rational(v(i)));
    return out;
}

VectorXr vector_from_json(const Json& value, const std::string& where)
{
    if (!value.is_array()) throw InputError("schema violation: " + where + " must be an array");
    VectorXr v(static_cast<Eigen::Index>(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i)
        v(static_cast<Eigen::Index>(i)) =
            rational_from_json(value[i], where + "[" + std::to_string(i + 1) + "]");
    return v;
}

Json approx_vector(const VectorXr& v)
{
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_double(v(i)));
    return out;
}

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("schema violation: ") + e.what());
    }
}

namespace {

int int_field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer())
        throw InputError(std::string("schema violation: integer field \"") + key + "\" required");
    return doc[key].get<int>();
}

}   // namespace

SecurityGame game_from_json(const Json& doc, const ValidationOptions& options)
{
    SecurityGame g;
    g.m = int_field(doc, "m");
    g.k_a = int_field(doc, "k_a");
    g.k_d = int_field(doc, "k_d");
    if (!doc.contains("targets") || !doc["targets"].is_array())
        throw InputError("schema violation: array field \"targets\" required");
    const Json& targets = doc["targets"];
    if (static_cast<int>(targets.size()) != g.m)
        throw InputError("schema violation: \"targets\" must have m entries");
    g.uac.resize(g.m);
    g.uau.resize(g.m);
    g.udc.resize(g.m);
    g.udu.resize(g.m);
    for (int i = 0; i < g.m; ++i) {
        const Json& t = targets[static_cast<std::size_t>(i)];
        const std::string where = "targets[" + std::to_string(i + 1) + "]";
        for (const char* key : {"uac", "uau", "udc", "udu"})
            if (!t.is_object() || !t.contains(key))
                throw InputError("schema violation: " + where + " lacks \"" + key + "\"");
        g.uac(i) = rational_from_json(t["uac"], where + ".uac");
        g.uau(i) = rational_from_json(t["uau"], where + ".uau");
        g.udc(i) = rational_from_json(t["udc"], where + ".udc");
        g.udu(i) = rational_from_json(t["udu"], where + ".udu");
    }
    ValidationReport report = validate(g, options);
    if (!report.ok()) throw InputError("invalid game: " + report.summary());
    return g;
}

Json game_to_json(const SecurityGame& game)
{
    Json doc;
    doc["m"] = game.m;
    doc["k_a"] = game.k_a;
    doc["k_d"] = game.k_d;
    Json targets = Json::array();
    for (int i = 0; i < game.m; ++i) {
        Json t;
        t["uac"] = format_rational(game.uac(i));
        t["uau"] = format_rational(game.uau(i));
        t["udc"] = format_rational(game.udc(i));
        t["udu"] = format_rational(game.udu(i));
        targets.push_back(t);
    }
    doc["targets"] = targets;
    return doc;
}

MarginalProfile profile_from_json(const Json& doc)
{
    if (!doc.is_object() || !doc.contains("alpha") || !doc.contains("beta"))
        throw InputError("schema violation: profile needs \"alpha\" and \"beta\"");
    return {vector_from_json(doc["alpha"], "alpha"), vector_from_json(doc["beta"], "beta")};
}

Json profile_to_json(const MarginalProfile& profile)
{
    Json doc;
    doc["alpha"] = vector_to_json(profile.alpha);
    doc["beta"] = vector_to_json(profile.beta);
    return doc;
}

Json report_to_json(const ValidationReport& report)
{
    Json doc;
    doc["ok"] = report.ok();
    Json list = Json::array();
    for (const auto& v : report.violations)
        list.push_back({{"code", v.code}, {"message", v.message}, {"targets", v.targets}});
    doc["violations"] = list;
    return doc;
}

}   // namespace secgame
