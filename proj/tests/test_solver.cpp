#include "secgame/oracle.hpp"
#include "secgame/solver.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace secgame;
using namespace secgame::testing;

namespace {

/** Profile of the continuum candidate with its free marginal pinned to x. */
MarginalProfile pinned(const SecurityGame& g, const SolvedEquilibrium& eq, const Rational& x)
{
    auto cand = std::get<EquilibriumCandidate>(construct_candidate(g, eq.r, eq.s, eq.t, eq.type));
    MarginalProfile p{VectorXr(g.m), VectorXr(g.m)};
    for (int i = 0; i < g.m; ++i) {
        p.alpha(i) = cand.alpha[static_cast<std::size_t>(i)].at(x);
        p.beta(i) = cand.beta[static_cast<std::size_t>(i)].at(x);
    }
    return p;
}

bool at_continuum_endpoint(const SecurityGame& g, const SolvedEquilibrium& eq, const MarginalProfile& other)
{
    for (const auto& end : {eq.multiplicity.interval.lo, eq.multiplicity.interval.hi}) {
        if (!end) continue;
        MarginalProfile p = pinned(g, eq, end->value);
        if (p.alpha == other.alpha && p.beta == other.beta) return true;
    }
    return false;
}

}   // namespace

TEST(Solver, GoldenGameIsTypeIAiAtOrigin)
{
    SolvedEquilibrium eq = solve_nash(golden_game());
    EXPECT_EQ(eq.type, EquilibriumType::IAi);
    EXPECT_EQ(eq.r, 0);
    EXPECT_EQ(eq.s, 0);
    EXPECT_EQ(eq.t, 0);
    EXPECT_EQ(eq.c1, q(1));
    EXPECT_EQ(eq.c2, q(756, 1375));
    EXPECT_EQ(eq.profile.alpha, vec({q(252, 275), q(216, 275), q(168, 275), q(189, 275)}));
    EXPECT_EQ(eq.profile.beta, vec({q(3, 10), q(1, 2), q(2, 5), q(4, 5)}));
    EXPECT_EQ(eq.v_a, q(3));
    EXPECT_EQ(eq.v_d, q(-11232, 1375));
    EXPECT_EQ(eq.multiplicity.kind, Multiplicity::Kind::unique);
}

TEST(Solver, ClosedFormsMatchExpectedOutcomesOnGoldenGame)
{
    SecurityGame g = golden_game();
    SolvedEquilibrium eq = solve_nash(g);
    EXPECT_EQ(closed_form_outcomes(g, eq), expected_outcomes(g, eq.profile));
}

TEST(Solver, ReverseSweepFindsTheSameEquilibriumOnGoldenGame)
{
    SecurityGame g = golden_game();
    SolvedEquilibrium fwd = solve_nash(g);
    SolvedEquilibrium rev = solve_nash(g, {.reverse_order = true});
    EXPECT_EQ(fwd.type, rev.type);
    EXPECT_EQ(fwd.profile.alpha, rev.profile.alpha);
    EXPECT_EQ(fwd.profile.beta, rev.profile.beta);
}

TEST(Solver, RejectsInvalidGames)
{
    SecurityGame g = golden_game();
    g.uau(1) = g.uau(0);
    EXPECT_THROW(solve_nash(g), InputError);
}

TEST(Solver, SweepVisitsOnlyCellsWithinBounds)
{
    SweepStats stats;
    solve_nash(golden_game(), {}, &stats);
    EXPECT_GE(stats.cells_evaluated, 1u);
}

TEST(Solver, GeneratedGamesRoundTripForEveryType)
{
    Gen gen(11);
    const EquilibriumType all[] = {EquilibriumType::IAi, EquilibriumType::IAii, EquilibriumType::IAiii,
                                   EquilibriumType::IBi, EquilibriumType::IBii, EquilibriumType::IBiii,
                                   EquilibriumType::II};
    for (EquilibriumType type : all) {
        for (int n = 0; n < 20; ++n) {
            GeneratorRequest req = random_request(gen, type);
            SecurityGame g = generate(req);
            SolvedEquilibrium eq = solve_nash(g);
            ASSERT_EQ(eq.type, type) << type_name(type) << " seed " << req.seed;
            if (type != EquilibriumType::II) {
                EXPECT_EQ(eq.r, req.r);
                EXPECT_EQ(eq.s, req.s);
                EXPECT_EQ(eq.t, req.t);
            }
            Verdict v = verify_equilibrium(g, eq.profile);
            EXPECT_TRUE(v.passed) << type_name(type) << " seed " << req.seed;
            EXPECT_EQ(closed_form_outcomes(g, eq), expected_outcomes(g, eq.profile));
            const bool free = type == EquilibriumType::IAii || type == EquilibriumType::IAiii ||
                              type == EquilibriumType::IBi;
            if (type == EquilibriumType::II)
                EXPECT_EQ(eq.multiplicity.kind, Multiplicity::Kind::family);
            else
                EXPECT_EQ(eq.multiplicity.kind, free ? Multiplicity::Kind::continuum : Multiplicity::Kind::unique);
            SolvedEquilibrium rev = solve_nash(g, {.reverse_order = true});
            EXPECT_TRUE(verify_equilibrium(g, rev.profile).passed);
            if (rev.type != eq.type) {
                ASSERT_TRUE(free) << type_name(type) << " seed " << req.seed;
                EXPECT_TRUE(at_continuum_endpoint(g, eq, rev.profile)) << type_name(type) << " seed " << req.seed;
            }
        }
    }
}

TEST(Realize, ReproducesMarginals)
{
    VectorXr beta = vec({q(3, 10), q(1, 2), q(2, 5), q(4, 5)});
    MixedStrategy mixed = realize_marginals(beta, 2);
    EXPECT_LE(mixed.support.size(), 4u);
    EXPECT_EQ(induced_marginals(mixed, 4), beta);
    Rational total = 0;
    for (const auto& [set, w] : mixed.support) {
        EXPECT_EQ(set.size(), 2u);
        EXPECT_GT(w, 0);
        total += w;
    }
    EXPECT_EQ(total, 1);
}

TEST(Realize, RejectsNonIntegralSum)
{
    EXPECT_THROW(realize_marginals(vec({q(1, 2), q(1, 3)}), 1), InputError);
    EXPECT_THROW(realize_marginals(vec({q(3, 2), q(1, 2)}), 1), InputError);
}
