#include "secgame/generator.hpp"
#include "secgame/io.hpp"
#include "secgame/optimizer.hpp"
#include "secgame/oracle.hpp"
#include "secgame/projection.hpp"
#include "secgame/protective.hpp"
#include "secgame/solver.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace secgame;

namespace {

/** Exit with status 1 after printing the document. */
struct NegativeResult
{
    Json doc;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json read_json(const std::string& path) { return parse_json_text(read_file(path)); }

std::string approx_text(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void render_table(const Json& doc, const std::string& prefix, std::ostream& out)
{
    if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (key == "approx") continue;
            render_table(value, prefix.empty() ? key : prefix + "." + key, out);
        }
        return;
    }
    out << prefix << (prefix.size() < 24 ? std::string(24 - prefix.size(), ' ') : std::string(" "));
    if (doc.is_array()) {
        bool nested = false;
        for (const auto& v : doc) nested = nested || v.is_structured();
        if (nested) {
            out << "\n";
            for (std::size_t i = 0; i < doc.size(); ++i) render_table(doc[i], prefix + "[" + std::to_string(i + 1) + "]", out);
            return;
        }
        for (std::size_t i = 0; i < doc.size(); ++i) out << (i ? "  " : "") << approx_text(doc[i]);
        out << "\n";
        return;
    }
    out << approx_text(doc) << "\n";
}

void emit(const Json& doc, const std::string& format)
{
    if (format == "table")
        render_table(doc, "", std::cout);
    else
        std::cout << doc.dump(2) << "\n";
}

Json one_based(const std::vector<int>& targets)
{
    Json out = Json::array();
    for (int i : targets) out.push_back(i + 1);
    return out;
}

Json equilibrium_to_json(const SolvedEquilibrium& eq)
{
    Json doc;
    doc["type"] = std::string(type_name(eq.type));
    doc["r"] = eq.r;
    doc["s"] = eq.s;
    doc["t"] = eq.t;
    doc["c1"] = rational_to_json(eq.c1);
    doc["c2"] = rational_to_json(eq.c2);
    doc["alpha"] = vector_to_json(eq.profile.alpha);
    doc["beta"] = vector_to_json(eq.profile.beta);
    doc["v_a"] = rational_to_json(eq.v_a);
    doc["v_d"] = rational_to_json(eq.v_d);
    Json cells;
    for (int c = 1; c <= 9; ++c) cells["I" + std::to_string(c)] = one_based(eq.partition[c]);
    doc["partition"] = cells;
    Json mult;
    mult["kind"] = std::string(multiplicity_name(eq.multiplicity.kind));
    if (eq.multiplicity.kind == Multiplicity::Kind::continuum) {
        mult["variable"] = std::string(free_slot_name(eq.multiplicity.variable));
        mult["target"] = eq.multiplicity.target + 1;
        mult["interval"] = eq.multiplicity.interval.str();
        mult["representative"] = rational_to_json(eq.multiplicity.representative);
    }
    mult["description"] = eq.multiplicity.description;
    doc["multiplicity"] = mult;
    doc["approx"] = {{"c1", to_double(eq.c1)},
                     {"c2", to_double(eq.c2)},
                     {"alpha", approx_vector(eq.profile.alpha)},
                     {"beta", approx_vector(eq.profile.beta)},
                     {"v_a", to_double(eq.v_a)},
                     {"v_d", to_double(eq.v_d)}};
    return doc;
}

Json mixed_to_json(const MixedStrategy& mixed)
{
    Json support = Json::array();
    for (const auto& [set, w] : mixed.support)
        support.push_back({{"set", one_based(set)}, {"probability", rational_to_json(w)}, {"approx", to_double(w)}});
    return {{"k", mixed.k}, {"support", support}};
}

SetFunctionTable table_from_json(const Json& values, int m, int k, const std::string& where)
{
    if (!values.is_array()) throw InputError("schema violation: " + where + " must be an array of {set, value}");
    SetFunctionTable t{m, k, {}};
    for (std::size_t n = 0; n < values.size(); ++n) {
        const Json& e = values[n];
        const std::string at = where + "[" + std::to_string(n + 1) + "]";
        if (!e.is_object() || !e.contains("set") || !e.contains("value") || !e["set"].is_array())
            throw InputError("schema violation: " + at + " needs \"set\" and \"value\"");
        std::vector<int> set;
        for (const Json& i : e["set"]) {
            if (!i.is_number_integer() || i.get<int>() < 1 || i.get<int>() > m)
                throw InputError("schema violation: " + at + ".set has a target outside 1.." + std::to_string(m));
            set.push_back(i.get<int>() - 1);
        }
        std::sort(set.begin(), set.end());
        if (std::adjacent_find(set.begin(), set.end()) != set.end())
            throw InputError("schema violation: " + at + ".set repeats a target");
        if (static_cast<int>(set.size()) > k)
            throw InputError("schema violation: " + at + ".set is larger than " + std::to_string(k));
        if (!t.values.emplace(set, rational_from_json(e["value"], at + ".value")).second)
            throw InputError("schema violation: " + at + " duplicates an earlier set");
    }
    return t;
}

int int_field(const Json& doc, const char* key)
{
    if (!doc.is_object() || !doc.contains(key) || !doc[key].is_number_integer())
        throw InputError(std::string("schema violation: integer field \"") + key + "\" required");
    return doc[key].get<int>();
}

NonAdditiveGame non_additive_from_json(const Json& doc)
{
    NonAdditiveGame g;
    g.m = int_field(doc, "m");
    g.k_a = int_field(doc, "k_a");
    g.k_d = int_field(doc, "k_d");
    for (auto [key, table] : {std::pair{"uac", &g.uac}, {"uau", &g.uau}, {"udc", &g.udc}, {"udu", &g.udu}}) {
        if (!doc.contains(key)) throw InputError(std::string("schema violation: table \"") + key + "\" required");
        *table = table_from_json(doc[key], g.m, g.k_a, key);
    }
    return g;
}

/** Optimizer game document: m, k_a, k_d and defender payoffs per target; attacker fields are ignored. */
DefenderPayoffs defender_from_json(const Json& doc, int& m, int& k_a, int& k_d)
{
    m = int_field(doc, "m");
    k_a = int_field(doc, "k_a");
    k_d = int_field(doc, "k_d");
    if (!doc.contains("targets") || !doc["targets"].is_array() || static_cast<int>(doc["targets"].size()) != m)
        throw InputError("schema violation: \"targets\" must be an array of m entries");
    DefenderPayoffs def{VectorXr(m), VectorXr(m)};
    for (int i = 0; i < m; ++i) {
        const Json& t = doc["targets"][static_cast<std::size_t>(i)];
        const std::string where = "targets[" + std::to_string(i + 1) + "]";
        if (!t.is_object() || !t.contains("udc") || !t.contains("udu"))
            throw InputError("schema violation: " + where + " needs \"udc\" and \"udu\"");
        def.udc(i) = rational_from_json(t["udc"], where + ".udc");
        def.udu(i) = rational_from_json(t["udu"], where + ".udu");
    }
    return def;
}

IntervalSpec intervals_from_json(const Json& doc, int m)
{
    if (!doc.is_object() || !doc.contains("targets") || !doc["targets"].is_array() ||
        static_cast<int>(doc["targets"].size()) != m)
        throw InputError("schema violation: interval document needs \"targets\" with m entries");
    IntervalSpec spec;
    for (int i = 0; i < m; ++i) {
        const Json& t = doc["targets"][static_cast<std::size_t>(i)];
        const std::string where = "targets[" + std::to_string(i + 1) + "]";
        for (const char* key : {"uac", "uau"})
            if (!t.is_object() || !t.contains(key) || !t[key].is_array() || t[key].size() != 2)
                throw InputError("schema violation: " + where + "." + key + " must be [lb, ub]");
        spec.lb_uac.push_back(rational_from_json(t["uac"][0], where + ".uac[1]"));
        spec.ub_uac.push_back(rational_from_json(t["uac"][1], where + ".uac[2]"));
        spec.lb_uau.push_back(rational_from_json(t["uau"][0], where + ".uau[1]"));
        spec.ub_uau.push_back(rational_from_json(t["uau"][1], where + ".uau[2]"));
    }
    return spec;
}

Json choice_to_json(const ParameterChoice& c)
{
    Json uac = Json::array(), uau = Json::array();
    for (Bound b : c.uac) uac.push_back(b == Bound::lb ? "lb" : "ub");
    for (Bound b : c.uau) uau.push_back(b == Bound::lb ? "lb" : "ub");
    return {{"uac", uac}, {"uau", uau}};
}

Json stats_to_json(const ExploreStats& s)
{
    return {{"cells_both_anchored", s.cells[0]},
            {"cells_one_anchored", s.cells[1]},
            {"cells_unanchored", s.cells[2]},
            {"cells_type_two", s.cells[3]},
            {"cells_pruned", s.cells_pruned},
            {"regions", s.regions},
            {"dp_runs", s.dp_runs},
            {"dp_states", s.dp_states},
            {"verified", s.verified},
            {"verification_rejects", s.verification_rejects},
            {"choices_solved", s.choices_solved},
            {"choices_skipped", s.choices_skipped}};
}

Json approximation_to_json(const ApproximationReport& rep)
{
    Json doc;
    doc["zero_sum"] = rep.zero_sum;
    doc["original_defender_value"] = rational_to_json(rep.original_defender_value);
    doc["projected_defender_value"] = rational_to_json(rep.projected_defender_value);
    doc["cross_value"] = rational_to_json(rep.cross_value);
    doc["strategy_relative_error"] = rep.strategy_relative_error ? rational_to_json(*rep.strategy_relative_error) : Json();
    doc["value_relative_error"] = rep.value_relative_error ? rational_to_json(*rep.value_relative_error) : Json();
    Json approx = {{"original_defender_value", to_double(rep.original_defender_value)},
                   {"projected_defender_value", to_double(rep.projected_defender_value)},
                   {"cross_value", to_double(rep.cross_value)}};
    if (rep.strategy_relative_error) approx["strategy_relative_error"] = to_double(*rep.strategy_relative_error);
    if (rep.value_relative_error) approx["value_relative_error"] = to_double(*rep.value_relative_error);
    doc["approx"] = approx;
    return doc;
}

}   // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact Nash equilibria of additive security games"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--seed", seed, "Seed for randomized commands");

    std::string game_path, profile_path, intervals_path, doc_path;
    bool permissive = false, no_distinct = false;

    auto* validate_cmd = app.add_subcommand("validate", "Report every violated game invariant");
    validate_cmd->add_option("game", game_path)->required();
    validate_cmd->add_flag("--permissive", permissive, "Allow zero payoffs (fully protective games)");
    validate_cmd->add_flag("--no-distinct", no_distinct, "Skip the distinctness checks");

    bool protective = false, zero_sum = false, reverse = false;
    auto* solve_cmd = app.add_subcommand("solve", "Compute a Nash equilibrium");
    solve_cmd->add_option("game", game_path)->required();
    auto* prot_flag = solve_cmd->add_flag("--protective", protective, "Use the fully protective solver");
    solve_cmd->add_flag("--zero-sum", zero_sum, "Use the zero-sum protective scan")->excludes(prot_flag);
    solve_cmd->add_flag("--reverse", reverse, "Walk the candidate cells in reverse order");
    solve_cmd->add_flag("--permissive", permissive, "Allow zero payoffs");

    auto* verify_cmd = app.add_subcommand("verify", "Check a marginal profile against best responses");
    verify_cmd->add_option("game", game_path)->required();
    verify_cmd->add_option("profile", profile_path)->required();
    verify_cmd->add_flag("--permissive", permissive, "Allow zero payoffs");

    auto* realize_cmd = app.add_subcommand("realize", "Decompose marginals into mixed strategies");
    realize_cmd->add_option("game", game_path)->required();
    realize_cmd->add_option("profile", profile_path)->required();
    realize_cmd->add_flag("--permissive", permissive, "Allow zero payoffs");

    std::string mode = "pseudo";
    std::optional<std::uint64_t> budget;
    bool no_prune = false;
    auto* optimize_cmd = app.add_subcommand("optimize", "Maximize the defender payoff over interval endpoints");
    optimize_cmd->add_option("game", game_path, "Game document with defender payoffs")->required();
    optimize_cmd->add_option("intervals", intervals_path, "Interval document")->required();
    optimize_cmd->add_option("--mode", mode)->check(CLI::IsMember({"pseudo", "exhaustive"}));
    optimize_cmd->add_option("--budget", budget, "Cap on exhaustively enumerated choices");
    optimize_cmd->add_flag("--no-prune", no_prune, "Disable decision-diagram pruning");

    auto* project_cmd = app.add_subcommand("project", "Nearest additive function or game");
    project_cmd->add_option("document", doc_path)->required();

    std::size_t matrix_budget = 10000;
    auto* approx_cmd = app.add_subcommand("approx-report", "Compare a non-additive game with its additive projection");
    approx_cmd->add_option("document", doc_path)->required();
    approx_cmd->add_option("--budget", matrix_budget, "Cap on bimatrix cells");

    std::string type_text = "I.A.i";
    GeneratorRequest req;
    std::string c1_text = "1", c2_text = "1";
    auto* generate_cmd = app.add_subcommand("generate", "Build a game with a prescribed equilibrium");
    generate_cmd->add_option("--type", type_text);
    generate_cmd->add_option("--r", req.r);
    generate_cmd->add_option("--s", req.s);
    generate_cmd->add_option("--t", req.t);
    generate_cmd->add_option("--ka", req.k_a)->required();
    generate_cmd->add_option("--kd", req.k_d)->required();
    generate_cmd->add_option("--c1", c1_text);
    generate_cmd->add_option("--c2", c2_text);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const ValidationOptions strict_opts{!no_distinct, permissive ? SignMode::permissive : SignMode::strict};
        if (validate_cmd->parsed()) {
            SecurityGame g;
            Json doc = read_json(game_path);
            ValidationReport report;
            try {
                g = game_from_json(doc, {false, SignMode::permissive});
                report = validate(g, strict_opts);
            } catch (const InputError& e) {
                report.violations.push_back({"schema", e.what(), {}});
            }
            emit(report_to_json(report), format);
            return report.ok() ? 0 : 2;
        }
        if (solve_cmd->parsed()) {
            const bool relaxed = permissive || protective || zero_sum;
            SecurityGame g = game_from_json(read_json(game_path), {true, relaxed ? SignMode::permissive : SignMode::strict});
            SolvedEquilibrium eq = zero_sum     ? solve_zero_sum_protective(g)
                                   : protective ? solve_protective(g)
                                                : solve_nash(g, {.reverse_order = reverse});
            emit(equilibrium_to_json(eq), format);
            return 0;
        }
        if (verify_cmd->parsed()) {
            SecurityGame g = game_from_json(read_json(game_path), {false, permissive ? SignMode::permissive : SignMode::strict});
            MarginalProfile p = profile_from_json(read_json(profile_path));
            check_profile(g, p);
            Verdict v = verify_equilibrium(g, p);
            Json doc;
            doc["verdict"] = v.passed ? "equilibrium" : "not an equilibrium";
            doc["passed"] = v.passed;
            doc["v_a"] = rational_to_json(v.v_a);
            doc["v_d"] = rational_to_json(v.v_d);
            doc["best_attacker"] = rational_to_json(v.best_attacker);
            doc["best_defender"] = rational_to_json(v.best_defender);
            doc["threshold_conditions"] = v.threshold_conditions;
            if (v.witness) {
                doc["witness"] = {{"player", v.witness->player == DeviationWitness::Player::attacker ? "attacker" : "defender"},
                                  {"move_from", v.witness->source + 1},
                                  {"move_to", v.witness->sink + 1},
                                  {"improvement", rational_to_json(v.witness->improvement)}};
            }
            if (!v.criteria_agree) throw InternalError("best-response and threshold criteria disagree");
            emit(doc, format);
            return v.passed ? 0 : 1;
        }
        if (realize_cmd->parsed()) {
            SecurityGame g = game_from_json(read_json(game_path), {false, permissive ? SignMode::permissive : SignMode::strict});
            MarginalProfile p = profile_from_json(read_json(profile_path));
            check_profile(g, p);
            Json doc;
            doc["attacker"] = mixed_to_json(realize_marginals(p.alpha, g.k_a));
            doc["defender"] = mixed_to_json(realize_marginals(p.beta, g.k_d));
            emit(doc, format);
            return 0;
        }
        if (optimize_cmd->parsed()) {
            int m = 0, k_a = 0, k_d = 0;
            DefenderPayoffs def = defender_from_json(read_json(game_path), m, k_a, k_d);
            IntervalSpec spec = intervals_from_json(read_json(intervals_path), m);
            OptimizationResult res;
            try {
                res = mode == "exhaustive" ? optimize_exhaustive(def, k_a, k_d, spec, budget)
                                           : optimize_pseudopoly(def, k_a, k_d, spec, {.prune = !no_prune});
            } catch (const NoFeasibleChoice& e) {
                throw NegativeResult{{{"error", e.what()}}};
            }
            Json doc;
            doc["v_d"] = rational_to_json(res.v_d);
            doc["choice"] = choice_to_json(res.best_choice);
            doc["game"] = game_to_json(res.game);
            doc["equilibrium"] = equilibrium_to_json(res.equilibrium);
            doc["explored"] = stats_to_json(res.explored);
            doc["approx"] = {{"v_d", to_double(res.v_d)}};
            emit(doc, format);
            return 0;
        }
        if (project_cmd->parsed()) {
            Json in = read_json(doc_path);
            Json doc;
            if (in.is_object() && in.contains("values")) {
                const int m = int_field(in, "m");
                const int k = int_field(in, "k");
                AdditiveProjection p = nearest_additive(table_from_json(in["values"], m, k, "values"));
                doc["x"] = vector_to_json(p.x);
                doc["distance_sq"] = rational_to_json(p.distance_sq);
                doc["gamma"] = vector_to_json(p.gamma);
                doc["warnings"] = p.warnings;
                doc["approx"] = {{"x", approx_vector(p.x)}, {"distance_sq", to_double(p.distance_sq)}};
            } else {
                std::vector<std::string> warnings;
                SecurityGame g = nearest_additive_game(non_additive_from_json(in), &warnings);
                doc = game_to_json(g);
                doc["warnings"] = warnings;
            }
            emit(doc, format);
            return 0;
        }
        if (approx_cmd->parsed()) {
            NonAdditiveGame original = non_additive_from_json(read_json(doc_path));
            std::vector<std::string> warnings;
            SecurityGame projected = nearest_additive_game(original, &warnings);
            Json doc = approximation_to_json(approximation_report(original, projected, matrix_budget));
            doc["projected_game"] = game_to_json(projected);
            doc["warnings"] = warnings;
            emit(doc, format);
            return 0;
        }
        if (generate_cmd->parsed()) {
            auto type = parse_type(type_text);
            if (!type) throw InputError("unknown equilibrium type \"" + type_text + "\"");
            req.type = *type;
            req.c1 = parse_rational(c1_text);
            req.c2 = parse_rational(c2_text);
            req.seed = seed;
            emit(game_to_json(generate(req)), format);
            return 0;
        }
    } catch (const NegativeResult& r) {
        emit(r.doc, format);
        return 1;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
