#include "secgame/optimizer.hpp"
#include "secgame/oracle.hpp"
#include "secgame/solver.hpp"
#include "secgame/subset_sum.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace secgame;
using namespace secgame::testing;

namespace {

constexpr Bound L = Bound::lb;
constexpr Bound U = Bound::ub;

}   // namespace

TEST(Optimizer, ProtectiveSixExhaustiveOptimum)
{
    OptimizationResult res = optimize_exhaustive(protective_defender(), 2, 3, protective_spec());
    EXPECT_EQ(res.v_d, q(-453, 173));
    EXPECT_TRUE(verify_equilibrium(res.game, res.equilibrium.profile).passed);
}

TEST(Optimizer, ProtectiveSixReferenceChoiceAttainsTheOptimum)
{
    ParameterChoice choice{std::vector<Bound>(6, L), {L, U, U, U, U, U}};
    SecurityGame g = game_for_choice(protective_defender(), 2, 3, protective_spec(), choice);
    SolvedEquilibrium eq = solve_nash(g);
    EXPECT_EQ(eq.v_d, q(-453, 173));
    EXPECT_EQ(eq.profile.alpha, vec({q(0), q(28, 173), q(40, 173), q(35, 173), q(70, 173), q(1)}));
    EXPECT_EQ(eq.profile.beta, vec({q(0), q(627, 1147), q(1027, 1147), q(835, 1147), q(952, 1147), q(0)}));
}

TEST(Optimizer, FiveTargetPseudopolynomial)
{
    OptimizationResult res = optimize_pseudopoly(five_target_defender(), 3, 2, five_target_spec());
    EXPECT_EQ(res.v_d, q(-18));
    EXPECT_EQ(res.equilibrium.type, EquilibriumType::IAi);
    EXPECT_EQ(res.equilibrium.profile.alpha, vec({q(0), q(1), q(7, 10), q(1), q(3, 10)}));
    for (int i : {2, 4})
        EXPECT_EQ(res.game.uau(i) - res.equilibrium.profile.beta(i) * res.game.delta_a(i), res.equilibrium.c1);
}

TEST(Optimizer, FiveTargetReferenceChoiceAttainsMinusEighteen)
{
    ParameterChoice choice{{U, L, L, U, L}, {L, U, L, U, U}};
    SecurityGame g = game_for_choice(five_target_defender(), 3, 2, five_target_spec(), choice);
    SolvedEquilibrium eq = solve_nash(g);
    EXPECT_EQ(eq.v_d, q(-18));
    EXPECT_EQ(eq.c1, q(1885, 53));
    EXPECT_EQ(eq.c2, q(21, 10));
    EXPECT_EQ(eq.profile.beta(2), q(8, 53));
    EXPECT_EQ(eq.profile.beta(4), q(45, 53));
}

TEST(Optimizer, PseudopolynomialMatchesExhaustiveOnSmallInstances)
{
    Gen gen(101);
    for (int n = 0; n < 25; ++n) {
        const int m = gen.integer(3, 5);
        const int k_a = gen.integer(1, m - 1);
        const int k_d = gen.integer(1, m - 1);
        IntervalSpec spec = random_separated_spec(gen, m);
        DefenderPayoffs def = random_defender(gen, m);
        OptimizationResult a = optimize_pseudopoly(def, k_a, k_d, spec);
        OptimizationResult b = optimize_exhaustive(def, k_a, k_d, spec);
        EXPECT_EQ(a.v_d, b.v_d) << "instance " << n;
        OptimizationResult c = optimize_pseudopoly(def, k_a, k_d, spec, {.prune = false});
        EXPECT_EQ(a.v_d, c.v_d) << "instance " << n;
    }
}

TEST(Optimizer, FixedSpecReducesToSolve)
{
    SecurityGame g = golden_game();
    OptimizationResult res = optimize_pseudopoly({g.udc, g.udu}, g.k_a, g.k_d, fixed_spec(g));
    EXPECT_EQ(res.v_d, q(-11232, 1375));
}

TEST(Optimizer, ExhaustiveHonoursBudget)
{
    EXPECT_THROW(optimize_exhaustive(protective_defender(), 2, 3, protective_spec(), 10), BudgetExceeded);
}

TEST(Optimizer, RejectsMalformedIntervals)
{
    IntervalSpec spec = five_target_spec();
    spec.lb_uau[0] = 100;
    EXPECT_THROW(optimize_pseudopoly(five_target_defender(), 3, 2, spec), InputError);
}

TEST(SubsetSum, EnumeratesReachableSums)
{
    std::vector<std::pair<Rational, Rational>> items = {{q(1), q(2)}, {q(3), q(5)}};
    SubsetSumResult res = subset_sum_selections(items, Interval::closed(q(6), q(7)), Integer(1));
    EXPECT_TRUE(res.feasible);
    EXPECT_EQ(res.witnesses.size(), 2u);   // 1+5 and 2+5
    EXPECT_FALSE(subset_sum_selections(items, Interval::open(q(7), q(8)), Integer(1)).feasible);
}

TEST(SubsetSum, ScoredSelectionMaximisesSecondary)
{
    std::vector<ScoredItem> items = {{{{q(1), q(0)}, {q(2), q(5)}}}, {{{q(1), q(3)}, {q(2), q(1)}}}};
    auto pick = scored_selection(items, Interval::point(q(3)), std::nullopt);
    ASSERT_TRUE(pick);
    EXPECT_EQ(*pick, (std::vector<int>{1, 0}));
}
