#pragma once

#include "secgame/model.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace secgame {

/** Largest attacker payoff against the defense marginals beta (top k_a per-target values). */
Rational best_response_value_attacker(const SecurityGame& game, const VectorXr& beta);

/** Largest defender payoff against the attack marginals alpha. */
Rational best_response_value_defender(const SecurityGame& game, const VectorXr& alpha);

struct DeviationWitness
{
    enum class Player { attacker, defender };
    Player player = Player::attacker;
    int source = -1;   ///< 0-based target losing probability mass
    int sink = -1;     ///< 0-based target gaining it
    Rational improvement;
};

struct Verdict
{
    bool passed = false;
    Rational v_a;
    Rational v_d;
    Rational best_attacker;
    Rational best_defender;
    std::optional<DeviationWitness> witness;
    bool threshold_conditions = false;   ///< per-target indifference-constant test
    bool criteria_agree = false;
};

/**
 * Exact best-response test of a marginal profile, cross-checked against the
 * per-target threshold characterization.
 */
Verdict verify_equilibrium(const SecurityGame& game, const MarginalProfile& profile);

/**
 * True when constants c1, c2 exist with: beta>0 => alpha*dd >= c2,
 * beta<1 => alpha*dd <= c2, alpha>0 => w >= c1, alpha<1 => w <= c1,
 * where w = uau - beta*da.
 */
bool threshold_conditions_hold(const SecurityGame& game, const MarginalProfile& profile);

/** All k-subsets of {0..m-1} in lexicographic order. */
std::vector<std::vector<int>> k_subsets(int m, int k);

std::size_t binomial(int n, int k);

/** Pure-strategy payoff matrices indexed by attacker k_a-subsets x defender k_d-subsets. */
struct BimatrixView
{
    std::vector<std::vector<int>> attacker_sets;
    std::vector<std::vector<int>> defender_sets;
    MatrixXr A;
    MatrixX<Rational> B;
};

/** Expands a payoff rule f(attacked, covered) -> (attacker, defender). */
BimatrixView expand_bimatrix(
    int m, int k_a, int k_d,
    const std::function<std::pair<Rational, Rational>(const std::vector<int>&, const std::vector<int>&)>& payoff,
    std::size_t budget = 10000);

BimatrixView expand_bimatrix(const SecurityGame& game, std::size_t budget = 10000);

/** Probability vector over `sets` induced by a mixed strategy. */
VectorXr strategy_vector(const MixedStrategy& mixed, const std::vector<std::vector<int>>& sets);

class SingularMatrix : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/**
 * Solves M x = rhs by fraction-free (Bareiss) elimination with row pivoting.
 * Throws SingularMatrix when M is singular.
 */
template <typename Scalar>
VectorX<Scalar> solve_linear_system(const MatrixX<Scalar>& M, const VectorX<Scalar>& rhs)
{
    const Eigen::Index n = M.rows();
    if (M.cols() != n || rhs.size() != n) throw std::invalid_argument("solve_linear_system: shape mismatch");
    MatrixX<Scalar> a(n, n + 1);
    a.leftCols(n) = M;
    a.col(n) = rhs;
    Scalar prev(1);
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index pivot = k;
        while (pivot < n && a(pivot, k) == Scalar(0)) ++pivot;
        if (pivot == n) throw SingularMatrix("singular matrix (no pivot in column " + std::to_string(k + 1) + ")");
        if (pivot != k) a.row(pivot).swap(a.row(k));
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j <= n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    VectorX<Scalar> x(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        Scalar acc = a(i, n);
        for (Eigen::Index j = i + 1; j < n; ++j) acc -= a(i, j) * x(j);
        x(i) = acc / a(i, i);
    }
    return x;
}

template <typename Scalar>
struct ZeroSumSolution
{
    Scalar value;
    VectorX<Scalar> row_mix;   ///< maximizing row player
    VectorX<Scalar> col_mix;   ///< minimizing column player
};

/**
 * Exact minimax solution of the matrix game A (row player maximizes) by the
 * simplex method with Bland's rule.  The result is certified before return.
 */
template <typename Scalar>
ZeroSumSolution<Scalar> solve_zero_sum_matrix(const MatrixX<Scalar>& A, std::size_t budget = 10000)
{
    const Eigen::Index nr = A.rows();
    const Eigen::Index nc = A.cols();
    if (nr == 0 || nc == 0) throw std::invalid_argument("solve_zero_sum_matrix: empty matrix");
    if (static_cast<std::size_t>(nr * nc) > budget)
        throw BudgetExceeded("matrix game has " + std::to_string(nr * nc) + " cells, budget is " +
                             std::to_string(budget));
    const Scalar shift = Scalar(1) - A.minCoeff();
    // maximize sum(y) subject to (A + shift) y <= 1, y >= 0; slack columns follow the y columns.
    const Eigen::Index cols = nc + nr;
    MatrixX<Scalar> T = MatrixX<Scalar>::Zero(nr + 1, cols + 1);
    for (Eigen::Index i = 0; i < nr; ++i) {
        for (Eigen::Index j = 0; j < nc; ++j) T(i, j) = A(i, j) + shift;
        T(i, nc + i) = Scalar(1);
        T(i, cols) = Scalar(1);
    }
    for (Eigen::Index j = 0; j < nc; ++j) T(nr, j) = Scalar(-1);
    std::vector<Eigen::Index> basis(static_cast<std::size_t>(nr));
    for (Eigen::Index i = 0; i < nr; ++i) basis[static_cast<std::size_t>(i)] = nc + i;

    for (;;) {
        Eigen::Index enter = -1;
        for (Eigen::Index j = 0; j < cols; ++j)
            if (T(nr, j) < Scalar(0)) {
                enter = j;
                break;
            }
        if (enter < 0) break;
        Eigen::Index leave = -1;
        Scalar best;
        for (Eigen::Index i = 0; i < nr; ++i) {
            if (T(i, enter) <= Scalar(0)) continue;
            Scalar ratio = T(i, cols) / T(i, enter);
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave < 0) throw std::logic_error("solve_zero_sum_matrix: unbounded program");
        Scalar piv = T(leave, enter);
        T.row(leave) /= piv;
        for (Eigen::Index i = 0; i <= nr; ++i) {
            if (i == leave || T(i, enter) == Scalar(0)) continue;
            Scalar f = T(i, enter);
            T.row(i) -= f * T.row(leave);
        }
        basis[static_cast<std::size_t>(leave)] = enter;
    }

    const Scalar total = T(nr, cols);
    VectorX<Scalar> y = VectorX<Scalar>::Zero(nc);
    for (Eigen::Index i = 0; i < nr; ++i)
        if (basis[static_cast<std::size_t>(i)] < nc) y(basis[static_cast<std::size_t>(i)]) = T(i, cols);
    VectorX<Scalar> x(nr);
    for (Eigen::Index i = 0; i < nr; ++i) x(i) = T(nr, nc + i);

    ZeroSumSolution<Scalar> sol;
    sol.value = Scalar(1) / total - shift;
    sol.col_mix = y / total;
    sol.row_mix = x / x.sum();
    const VectorX<Scalar> row_payoffs = A * sol.col_mix;
    const VectorX<Scalar> col_payoffs = A.transpose() * sol.row_mix;
    for (Eigen::Index i = 0; i < nr; ++i)
        if (row_payoffs(i) > sol.value) throw std::logic_error("zero-sum certificate failed (column mix)");
    for (Eigen::Index j = 0; j < nc; ++j)
        if (col_payoffs(j) < sol.value) throw std::logic_error("zero-sum certificate failed (row mix)");
    return sol;
}

struct BimatrixEquilibrium
{
    VectorXr row_mix;
    VectorXr col_mix;
    Rational row_value;
    Rational col_value;
};

/**
 * One Nash equilibrium of a small bimatrix game by equal-size support
 * enumeration.  Throws BudgetExceeded past `budget` support pairs and
 * InternalError when no equal-size support pair works (degenerate game).
 */
BimatrixEquilibrium support_enumeration(const MatrixXr& A, const MatrixXr& B, std::size_t budget = 1000000);

}   // namespace secgame
