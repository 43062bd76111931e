#include "secgame/oracle.hpp"
#include "secgame/solver.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace secgame;
using namespace secgame::testing;

namespace {

MarginalProfile golden_profile()
{
    return {vec({q(252, 275), q(216, 275), q(168, 275), q(189, 275)}), vec({q(3, 10), q(1, 2), q(2, 5), q(4, 5)})};
}

}   // namespace

TEST(Oracle, AcceptsGoldenGameEquilibrium)
{
    Verdict v = verify_equilibrium(golden_game(), golden_profile());
    EXPECT_TRUE(v.passed);
    EXPECT_TRUE(v.threshold_conditions);
    EXPECT_TRUE(v.criteria_agree);
    EXPECT_EQ(v.best_attacker, v.v_a);
    EXPECT_EQ(v.best_defender, v.v_d);
    EXPECT_FALSE(v.witness);
}

TEST(Oracle, PerturbedProfileYieldsAWitness)
{
    MarginalProfile p = golden_profile();
    p.beta(0) += q(1, 10);
    p.beta(3) -= q(1, 10);
    Verdict v = verify_equilibrium(golden_game(), p);
    EXPECT_FALSE(v.passed);
    EXPECT_FALSE(v.threshold_conditions);
    EXPECT_TRUE(v.criteria_agree);
    ASSERT_TRUE(v.witness);
    EXPECT_GT(v.witness->improvement, 0);
}

TEST(Oracle, TypeTwoProfileCoversTheAttackedTarget)
{
    SecurityGame g = make_game(1, 2, {q(1), q(2), q(3)}, {q(4), q(5), q(6)}, {q(-1), q(-1, 2), q(-2)},
                               {q(-3), q(-4), q(-5)});
    MarginalProfile p{vec(qs({0, 0, 1})), vec(qs({1, 0, 1}))};
    EXPECT_EQ(best_response_value_defender(g, p.alpha), q(-2));
    Verdict v = verify_equilibrium(g, p);
    EXPECT_EQ(v.v_d, q(-2));
}

TEST(Oracle, SubsetEnumeration)
{
    EXPECT_EQ(binomial(6, 3), 20u);
    EXPECT_EQ(k_subsets(4, 2).size(), 6u);
    EXPECT_EQ(k_subsets(3, 2).front(), (std::vector<int>{0, 1}));
    EXPECT_THROW(expand_bimatrix(golden_game(), 3), BudgetExceeded);
}

TEST(Oracle, ExactLinearSolve)
{
    MatrixXr M(2, 2);
    M << q(0), q(2), q(3), q(1);
    VectorXr x = solve_linear_system<Rational>(M, vec(qs({4, 5})));
    EXPECT_EQ(x, vec({q(1), q(2)}));
    MatrixXr S(2, 2);
    S << q(1), q(2), q(2), q(4);
    EXPECT_THROW(solve_linear_system<Rational>(S, vec(qs({1, 1}))), SingularMatrix);
}

TEST(Oracle, ZeroSumMatrixGame)
{
    MatrixXr A(2, 2);
    A << q(1), q(-1), q(-1), q(1);
    auto sol = solve_zero_sum_matrix<Rational>(A);
    EXPECT_EQ(sol.value, 0);
    EXPECT_EQ(sol.row_mix, vec({q(1, 2), q(1, 2)}));
    EXPECT_EQ(sol.col_mix, vec({q(1, 2), q(1, 2)}));
}

TEST(Oracle, SupportEnumerationMatchesTheStructuralSolver)
{
    Gen gen(31);
    for (int n = 0; n < 20; ++n) {
        GeneratorRequest req = random_request(gen, n % 2 ? EquilibriumType::IAi : EquilibriumType::II);
        req.r = std::min(req.r, 1);
        req.s = std::min(req.s, 1);
        req.t = 0;
        req.k_a = std::min(req.k_a, 2);
        req.k_d = req.type == EquilibriumType::II ? req.k_a + 1 : std::min(req.k_d, 2);
        SecurityGame g = generate(req);
        if (binomial(g.m, g.k_a) * binomial(g.m, g.k_d) > 400) continue;
        BimatrixView view = expand_bimatrix(g);
        BimatrixEquilibrium e = support_enumeration(view.A, view.B);
        SolvedEquilibrium eq = solve_nash(g);
        // interchangeability: the attacker payoff of any two equilibria coincides
        EXPECT_EQ(e.row_value, eq.v_a);
        MixedStrategy md = realize_marginals(eq.profile.beta, g.k_d);
        VectorXr w = strategy_vector(md, view.defender_sets);
        EXPECT_EQ(Rational(e.row_mix.transpose() * view.A * w), eq.v_a);
    }
}
