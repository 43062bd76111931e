#include "secgame/solver.hpp"

#include <algorithm>
#include <numeric>

namespace secgame {

namespace {

struct Cell
{
    int r, s, t;
    EquilibriumType type;
};

std::vector<Cell> sweep_cells(const CandidateBuilder& b)
{
    std::vector<Cell> cells;
    for (int r = 0; r <= b.max_r(); ++r)
        for (int s = 0; s <= b.max_s(r); ++s)
            for (int t = 0; t <= b.max_t(s); ++t)
                for (EquilibriumType type : kTypeOneOrder) cells.push_back({r, s, t, type});
    return cells;
}

}   // namespace

std::optional<SolvedEquilibrium> sweep_type_one(const CandidateBuilder& builder, bool reverse, SweepStats* stats)
{
    std::vector<Cell> cells = sweep_cells(builder);
    if (reverse) std::reverse(cells.begin(), cells.end());
    for (const Cell& c : cells) {
        if (stats) ++stats->cells_evaluated;
        CandidateResult cand = builder.build(c.r, c.s, c.t, c.type);
        if (std::holds_alternative<Rejection>(cand)) {
            if (stats) ++stats->structural_rejects;
            continue;
        }
        FeasibilityResult res = check_feasibility(builder.game(), std::get<EquilibriumCandidate>(cand));
        if (auto* eq = std::get_if<SolvedEquilibrium>(&res)) return std::move(*eq);
        if (stats) ++stats->infeasible_rejects;
    }
    return std::nullopt;
}

SolvedEquilibrium solve_nash(const SecurityGame& game, const SolveOptions& options, SweepStats* stats)
{
    if (options.validate_input) {
        ValidationReport report = validate(game, {true, SignMode::permissive});
        if (!report.ok()) throw InputError("invalid game: " + report.summary());
    }
    CandidateBuilder builder(game);
    if (auto eq = sweep_type_one(builder, options.reverse_order, stats)) return std::move(*eq);
    if (auto eq = construct_tied_cover_block(game)) return std::move(*eq);
    if (auto eq = construct_type2(game)) return std::move(*eq);
    throw InternalError("no equilibrium found");
}

std::optional<SolvedEquilibrium> construct_type2(const SecurityGame& game)
{
    if (game.k_d <= game.k_a) return std::nullopt;
    const int m = game.m;
    const CanonicalOrders orders = canonical_orders(game);
    std::vector<char> in9(static_cast<std::size_t>(m), 0);
    SolvedEquilibrium eq;
    TargetPartition& p = eq.partition;
    for (int k = 0; k < game.k_a; ++k) {
        int i = orders.perm_uac[static_cast<std::size_t>(m - 1 - k)];
        in9[static_cast<std::size_t>(i)] = 1;
        p[9].push_back(i);
    }
    Rational c1 = game.uac(p[9].front());
    for (int i : p[9]) c1 = std::min(c1, Rational(game.uac(i)));

    // each outside target needs enough coverage to keep its uncovered payoff at or below c1
    const int slots = game.k_d - game.k_a;
    eq.profile.alpha = VectorXr::Constant(m, Rational(0));
    eq.profile.beta = VectorXr::Constant(m, Rational(0));
    Rational left = slots;
    for (int i = 0; i < m; ++i) {
        if (in9[static_cast<std::size_t>(i)]) {
            eq.profile.alpha(i) = 1;
            eq.profile.beta(i) = 1;
        } else if (game.uau(i) > c1) {
            eq.profile.beta(i) = (game.uau(i) - c1) / game.delta_a(i);
            left -= eq.profile.beta(i);
        }
    }
    if (left < 0) return std::nullopt;
    // spare coverage goes to the constrained targets first, then by index
    for (int pass = 0; pass < 2 && left > 0; ++pass)
        for (int i = 0; i < m && left > 0; ++i) {
            if (in9[static_cast<std::size_t>(i)] || (pass == 0) != (game.uau(i) > c1)) continue;
            Rational add = std::min(left, Rational(1 - eq.profile.beta(i)));
            eq.profile.beta(i) += add;
            left -= add;
        }
    for (int i = 0; i < m; ++i) {
        if (in9[static_cast<std::size_t>(i)]) continue;
        const Rational& b = eq.profile.beta(i);
        p[b == 0 ? 1 : b == 1 ? 7 : 4].push_back(i);
    }
    p.normalize();
    eq.type = EquilibriumType::II;
    eq.r = static_cast<int>(p[1].size());
    eq.s = 0;
    eq.t = static_cast<int>(p[9].size());
    eq.c1 = c1;
    eq.c2 = 0;
    Outcomes out = expected_outcomes(game, eq.profile);
    eq.v_a = out.v_a;
    eq.v_d = out.v_d;
    eq.multiplicity.kind = Multiplicity::Kind::family;
    eq.multiplicity.description = "the " + std::to_string(slots) +
                                  " units of coverage outside I9 may be spread over any targets, provided each "
                                  "target with uau above c1 keeps at least (uau - c1) / delta_a";
    return eq;
}

std::optional<SolvedEquilibrium> construct_tied_cover_block(const SecurityGame& game)
{
    const int m = game.m;
    const CanonicalOrders orders = canonical_orders(game);
    const VectorXr dd = game.delta_d();
    const int n3 = m - game.k_d;
    std::vector<char> in3(static_cast<std::size_t>(m), 0);
    SolvedEquilibrium eq;
    TargetPartition& p = eq.partition;
    for (int k = 0; k < n3; ++k) {
        int i = orders.perm_dd[static_cast<std::size_t>(k)];
        in3[static_cast<std::size_t>(i)] = 1;
        p[3].push_back(i);
    }
    std::optional<Rational> low;
    for (int i = 0; i < m; ++i)
        if (!in3[static_cast<std::size_t>(i)] && (!low || game.uac(i) < *low)) low = game.uac(i);
    std::vector<int> tied;
    for (int i = 0; i < m; ++i) {
        if (in3[static_cast<std::size_t>(i)]) continue;
        (game.uac(i) == *low ? tied : p[9]).push_back(i);
    }
    const int R = game.k_a - n3 - static_cast<int>(p[9].size());
    if (R <= 0 || R >= static_cast<int>(tied.size())) return std::nullopt;
    for (int i : p[3])
        if (game.uau(i) < *low) return std::nullopt;
    Rational c2 = 0;
    for (int i : p[3]) c2 = std::max(c2, Rational(dd(i)));
    Rational lb_sum, slack_sum;
    for (int i : tied) {
        lb_sum += c2 / dd(i);
        slack_sum += 1 - c2 / dd(i);
    }
    if (lb_sum > R) return std::nullopt;
    const Rational theta = (R - lb_sum) / slack_sum;
    eq.profile.alpha = VectorXr::Constant(m, Rational(0));
    eq.profile.beta = VectorXr::Constant(m, Rational(1));
    for (int i : p[3]) {
        eq.profile.alpha(i) = 1;
        eq.profile.beta(i) = 0;
    }
    for (int i : p[9]) eq.profile.alpha(i) = 1;
    for (int i : tied) {
        Rational lb = c2 / dd(i);
        eq.profile.alpha(i) = lb + (1 - lb) * theta;
    }
    p[8] = tied;
    p.normalize();
    eq.type = EquilibriumType::IAiii;
    eq.r = 0;
    eq.s = n3;
    eq.t = static_cast<int>(p[9].size());
    eq.c1 = *low;
    eq.c2 = c2;
    Outcomes out = expected_outcomes(game, eq.profile);
    eq.v_a = out.v_a;
    eq.v_d = out.v_d;
    eq.multiplicity.kind = Multiplicity::Kind::family;
    eq.multiplicity.description = "attack mass " + std::to_string(R) +
                                  " may be spread over the tied covered block in any way that keeps "
                                  "alpha*delta_d >= c2 on it";
    return eq;
}

Outcomes closed_form_outcomes(const SecurityGame& game, const SolvedEquilibrium& eq)
{
    const TargetPartition& p = eq.partition;
    if (eq.type == EquilibriumType::II) {
        Outcomes out;
        for (int i : p[9]) {
            out.v_a += game.uac(i);
            out.v_d += game.udc(i);
        }
        return out;
    }
    Rational base_a, base_d;
    for (int i : p[3]) {
        base_a += game.uau(i);
        base_d += game.udu(i);
    }
    for (int i : p[9]) {
        base_a += game.uac(i);
        base_d += game.udc(i);
    }
    Rational D;
    for (int i : p[5]) D += game.udu(i) / game.delta_d(i);
    const bool b_family = has_i6(eq.type);
    const int s = static_cast<int>(p[3].size());
    const int t = static_cast<int>(p[9].size());
    const int n8 = static_cast<int>(p[8].size());
    Outcomes out;
    out.v_a = base_a + eq.c1 * (game.k_a - s - t - (b_family ? 1 : 0));
    out.v_d = base_d + eq.c2 * (D + game.k_d - t - n8);
    for (int i : p[2]) out.v_d += eq.profile.alpha(i) * game.udu(i);
    for (int i : p[8]) out.v_d += eq.profile.alpha(i) * game.udc(i);
    if (b_family) {
        int j6 = p[6].front();
        out.v_a += game.uau(j6) - eq.profile.beta(j6) * game.delta_a(j6);
        out.v_d += game.udu(j6);
    }
    return out;
}

Multiplicity multiplicity_report(const SecurityGame& game, const SolvedEquilibrium& eq)
{
    if (eq.type == EquilibriumType::II) {
        if (game.k_d <= game.k_a) throw InternalError("type II equilibrium with k_d <= k_a");
        if (sweep_type_one(CandidateBuilder(game))) throw InternalError("type II found alongside a type I cell");
        if (eq.multiplicity.kind != Multiplicity::Kind::family) throw InternalError("type II must be a family");
        return eq.multiplicity;
    }
    const bool free_type =
        eq.type == EquilibriumType::IAii || eq.type == EquilibriumType::IAiii || eq.type == EquilibriumType::IBi;
    if (eq.multiplicity.kind == Multiplicity::Kind::continuum && !free_type)
        throw InternalError("continuum reported for a fully determined type");
    if (eq.multiplicity.kind == Multiplicity::Kind::continuum && eq.multiplicity.interval.is_point())
        throw InternalError("continuum with a degenerate interval");
    return eq.multiplicity;
}

}   // namespace secgame
