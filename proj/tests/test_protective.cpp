#include "secgame/oracle.hpp"
#include "secgame/protective.hpp"
#include "secgame/solver.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace secgame;
using namespace secgame::testing;

namespace {

const VectorXr kAlpha = vec({q(56, 229), q(28, 229), q(40, 229), q(35, 229), q(70, 229), q(1)});

}   // namespace

TEST(Protective, ProtectiveSixLowerBoundGame)
{
    SecurityGame g = protective_game(protective_lb_uau());
    SolvedEquilibrium eq = solve_protective(g);
    EXPECT_EQ(eq.profile.alpha, kAlpha);
    EXPECT_EQ(eq.profile.beta, vec({q(1, 73), q(37, 73), q(65, 73), q(55, 73), q(61, 73), q(0)}));
    EXPECT_EQ(eq.v_d, q(-789, 229));
    EXPECT_EQ(eq.c1, q(72, 73));
    EXPECT_TRUE(verify_equilibrium(g, eq.profile).passed);
}

TEST(Protective, ProtectiveSixUpperBoundGame)
{
    SecurityGame g = protective_game(protective_ub_uau());
    SolvedEquilibrium eq = solve_protective(g);
    EXPECT_EQ(eq.profile.alpha, kAlpha);
    EXPECT_EQ(eq.profile.beta, vec({q(6469, 9589), q(2309, 9589), q(7909, 9589), q(5221, 9589), q(6859, 9589), q(0)}));
    EXPECT_EQ(eq.v_d, q(-789, 229));
}

TEST(Protective, ClosedFormsMatchExpectedOutcomes)
{
    Gen gen(5);
    for (int n = 0; n < 100; ++n) {
        const int m = gen.integer(3, 8);
        const int k_a = gen.integer(1, m - 1);
        const int k_d = gen.integer(1, m - 1);
        SecurityGame g = random_protective(gen, m, k_a, k_d);
        SolvedEquilibrium eq = solve_protective(g);
        EXPECT_EQ(closed_form_outcomes_protective(g, eq), expected_outcomes(g, eq.profile));
    }
}

TEST(Protective, AgreesWithGeneralSolver)
{
    Gen gen(21);
    for (int n = 0; n < 100; ++n) {
        const int m = gen.integer(3, 8);
        const int k_a = gen.integer(1, m - 1);
        const int k_d = gen.integer(1, m - 1);
        SecurityGame g = random_protective(gen, m, k_a, k_d);
        SolvedEquilibrium p = solve_protective(g);
        SolvedEquilibrium n_eq = solve_nash(g);
        EXPECT_EQ(p.v_a, n_eq.v_a);
        EXPECT_EQ(p.v_d, n_eq.v_d);
        EXPECT_EQ(p.c1, n_eq.c1);
        EXPECT_EQ(p.c2, n_eq.c2);
        EXPECT_TRUE(verify_equilibrium(g, p.profile).passed);
    }
}

TEST(Protective, CellCountIsQuadraticAndSkipsTheTLoop)
{
    Gen gen(3);
    for (int m : {6, 12, 24}) {
        SecurityGame g = random_protective(gen, m, m / 2, m / 3);
        ProtectiveStats stats;
        solve_protective(g, &stats);
        EXPECT_EQ(stats.max_t, 0);
        EXPECT_LE(stats.cells_evaluated, static_cast<std::size_t>(4 * (m + 1) * (m + 1)));
    }
}

TEST(Protective, ZeroSumScanAgrees)
{
    Gen gen(8);
    for (int n = 0; n < 100; ++n) {
        const int m = gen.integer(3, 9);
        SecurityGame g = random_protective(gen, m, gen.integer(1, m - 1), gen.integer(1, m - 1), true);
        SolvedEquilibrium a = solve_protective(g);
        SolvedEquilibrium b = solve_zero_sum_protective(g);
        EXPECT_EQ(a.v_a, b.v_a);
        EXPECT_EQ(a.v_d, b.v_d);
        EXPECT_EQ(a.c1, b.c1);
        EXPECT_EQ(a.c2, b.c2);
    }
}

TEST(Protective, ZeroSumScanIsLinear)
{
    Gen gen(9);
    SecurityGame g = random_protective(gen, 40, 17, 11, true);
    ProtectiveStats stats;
    solve_zero_sum_protective(g, &stats);
    EXPECT_LE(stats.cells_evaluated, 4u * 41u);
}

TEST(Protective, SigmaAlphaCountsSparedAndMixedMass)
{
    VectorXr u = vec(qs({1, 2, 3, 4}));
    SigmaAlphaEvaluation e = sigma_alpha(u, 1, 2, q(1, 2), q(-3));
    // targets 3 and 4 mixed with alpha = 3/u, target 2 partially attacked, target 1 spared
    EXPECT_EQ(e.value, q(1, 2) + q(3, 3) + q(3, 4));
}

TEST(Protective, RejectsNonProtectiveGames)
{
    EXPECT_THROW(solve_protective(golden_game()), InputError);
}
