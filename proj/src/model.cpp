#include "secgame/model.hpp"

#include "secgame/io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace secgame {

namespace {

std::string target_name(const char* key, int i) { return std::string(key) + "(" + std::to_string(i + 1) + ")"; }

void check_distinct(const VectorXr& values, const char* key, ValidationReport& report)
{
    std::map<Rational, std::vector<int>> groups;
    for (int i = 0; i < values.size(); ++i) groups[values(i)].push_back(i + 1);
    for (const auto& [value, members] : groups) {
        if (members.size() < 2) continue;
        std::ostringstream msg;
        msg << "distinctness assumption violated: " << key << " equals " << format_rational(value)
            << " on targets";
        for (int t : members) msg << ' ' << t;
        report.violations.push_back({"distinctness", msg.str(), members});
    }
}

std::vector<int> sorted_by(const VectorXr& key)
{
    std::vector<int> perm(static_cast<std::size_t>(key.size()));
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return key(a) < key(b); });
    return perm;
}

}   // namespace

SecurityGame make_game(int k_a, int k_d, const std::vector<Rational>& uac,
                       const std::vector<Rational>& uau, const std::vector<Rational>& udc,
                       const std::vector<Rational>& udu)
{
    if (uau.size() != uac.size() || udc.size() != uac.size() || udu.size() != uac.size())
        throw InputError("dimension mismatch between payoff vectors");
    SecurityGame g;
    g.m = static_cast<int>(uac.size());
    g.k_a = k_a;
    g.k_d = k_d;
    g.uac = make_vector(uac);
    g.uau = make_vector(uau);
    g.udc = make_vector(udc);
    g.udu = make_vector(udu);
    return g;
}

std::string ValidationReport::summary() const
{
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.message;
    }
    return out;
}

ValidationReport validate(const SecurityGame& game, const ValidationOptions& options)
{
    ValidationReport report;
    auto add = [&](std::string code, std::string message, std::vector<int> targets = {}) {
        report.violations.push_back({std::move(code), std::move(message), std::move(targets)});
    };
    if (game.m < 2) add("size", "m >= 2 required");
    if (game.k_a < 1) add("resources", "k_a >= 1 required");
    if (game.k_a >= game.m) add("resources", "k_a < m required");
    if (game.k_d < 1) add("resources", "k_d >= 1 required");
    if (game.k_d >= game.m) add("resources", "k_d < m required");
    const Eigen::Index m = game.m;
    if (game.uac.size() != m || game.uau.size() != m || game.udc.size() != m || game.udu.size() != m) {
        add("dimension", "payoff vectors must have m entries");
        return report;
    }
    const bool strict = options.signs == SignMode::strict;
    for (int i = 0; i < game.m; ++i) {
        auto sign_check = [&](const char* key, const Rational& v, bool positive) {
            bool bad = positive ? (strict ? v <= 0 : v < 0) : (strict ? v >= 0 : v > 0);
            if (bad) {
                const char* rel = positive ? (strict ? "positive" : "non-negative")
                                           : (strict ? "negative" : "non-positive");
                add("sign", target_name(key, i) + " must be " + rel, {i + 1});
            }
        };
        sign_check("uac", game.uac(i), true);
        sign_check("uau", game.uau(i), true);
        sign_check("udc", game.udc(i), false);
        sign_check("udu", game.udu(i), false);
        if (game.delta_a(i) <= 0) add("delta", target_name("delta_a", i) + " must be positive", {i + 1});
        if (game.delta_d(i) <= 0) add("delta", target_name("delta_d", i) + " must be positive", {i + 1});
    }
    if (options.require_distinct) {
        bool uac_all_zero = (game.uac.array() == Rational(0)).all();
        if (!uac_all_zero) check_distinct(game.uac, "uac", report);
        check_distinct(game.uau, "uau", report);
        check_distinct(game.delta_d(), "delta_d", report);
    }
    return report;
}

bool is_fully_protective(const SecurityGame& game)
{
    return (game.uac.array() == Rational(0)).all() && (game.udc.array() == Rational(0)).all();
}

bool is_zero_sum(const SecurityGame& game)
{
    return is_fully_protective(game) && (game.uau.array() == (-game.udu).array()).all();
}

void check_profile(const SecurityGame& game, const MarginalProfile& profile)
{
    if (profile.alpha.size() != game.m || profile.beta.size() != game.m)
        throw InputError("dimension mismatch: profile vectors must have " + std::to_string(game.m) +
                         " entries");
    for (int i = 0; i < game.m; ++i) {
        if (profile.alpha(i) < 0 || profile.alpha(i) > 1)
            throw InputError("alpha(" + std::to_string(i + 1) + ") outside [0,1]");
        if (profile.beta(i) < 0 || profile.beta(i) > 1)
            throw InputError("beta(" + std::to_string(i + 1) + ") outside [0,1]");
    }
    if (profile.alpha.sum() != game.k_a)
        throw InputError("alpha must sum to k_a = " + std::to_string(game.k_a));
    if (profile.beta.sum() != game.k_d)
        throw InputError("beta must sum to k_d = " + std::to_string(game.k_d));
}

VectorXr induced_marginals(const MixedStrategy& mixed, int m)
{
    VectorXr out = VectorXr::Constant(m, Rational(0));
    for (const auto& [set, prob] : mixed.support)
        for (int i : set) out(i) += prob;
    return out;
}

Outcomes expected_outcomes(const SecurityGame& game, const MarginalProfile& profile)
{
    check_profile(game, profile);
    Outcomes out;
    for (int i = 0; i < game.m; ++i) {
        const Rational& a = profile.alpha(i);
        const Rational& b = profile.beta(i);
        out.v_a += a * (game.uac(i) * b + game.uau(i) * (1 - b));
        out.v_d += a * (game.udc(i) * b + game.udu(i) * (1 - b));
    }
    return out;
}

CanonicalOrders canonical_orders(const SecurityGame& game)
{
    return {sorted_by(game.uau), sorted_by(game.uac), sorted_by(game.delta_d()), sorted_by(game.udu)};
}

SecurityGame parse_game(std::string_view document, const ValidationOptions& options)
{
    return game_from_json(parse_json_text(document), options);
}

std::string serialize_game(const SecurityGame& game) { return game_to_json(game).dump(2); }

MarginalProfile parse_profile(std::string_view document)
{
    return profile_from_json(parse_json_text(document));
}

std::string serialize_profile(const MarginalProfile& profile) { return profile_to_json(profile).dump(2); }

}   // namespace secgame
