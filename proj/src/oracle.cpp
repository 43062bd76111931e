#include "secgame/oracle.hpp"

#include <algorithm>
#include <functional>

namespace secgame {

namespace {

Rational top_sum(std::vector<Rational> values, int k)
{
    std::sort(values.begin(), values.end(), std::greater<>());
    Rational sum;
    for (int i = 0; i < k && i < static_cast<int>(values.size()); ++i) sum += values[static_cast<std::size_t>(i)];
    return sum;
}

std::vector<Rational> attack_values(const SecurityGame& game, const VectorXr& beta)
{
    std::vector<Rational> w(static_cast<std::size_t>(game.m));
    for (int i = 0; i < game.m; ++i)
        w[static_cast<std::size_t>(i)] = game.uac(i) * beta(i) + game.uau(i) * (1 - beta(i));
    return w;
}

std::vector<Rational> cover_values(const SecurityGame& game, const VectorXr& alpha)
{
    std::vector<Rational> v(static_cast<std::size_t>(game.m));
    for (int i = 0; i < game.m; ++i) v[static_cast<std::size_t>(i)] = alpha(i) * game.delta_d(i);
    return v;
}

/** Move from the weakest loaded target to the strongest unsaturated one. */
std::optional<DeviationWitness> find_move(const std::vector<Rational>& value, const VectorXr& mass,
                                          DeviationWitness::Player player)
{
    int source = -1;
    int sink = -1;
    for (int i = 0; i < mass.size(); ++i) {
        const auto& v = value[static_cast<std::size_t>(i)];
        if (mass(i) > 0 && (source < 0 || v < value[static_cast<std::size_t>(source)])) source = i;
        if (mass(i) < 1 && (sink < 0 || v > value[static_cast<std::size_t>(sink)])) sink = i;
    }
    if (source < 0 || sink < 0) return std::nullopt;
    Rational gain = value[static_cast<std::size_t>(sink)] - value[static_cast<std::size_t>(source)];
    if (gain <= 0) return std::nullopt;
    Rational amount = std::min(Rational(mass(source)), Rational(1 - mass(sink)));
    return DeviationWitness{player, source, sink, amount * gain};
}

}   // namespace

Rational best_response_value_attacker(const SecurityGame& game, const VectorXr& beta)
{
    if (beta.size() != game.m) throw InputError("dimension mismatch: beta");
    return top_sum(attack_values(game, beta), game.k_a);
}

Rational best_response_value_defender(const SecurityGame& game, const VectorXr& alpha)
{
    if (alpha.size() != game.m) throw InputError("dimension mismatch: alpha");
    Rational base;
    for (int i = 0; i < game.m; ++i) base += alpha(i) * game.udu(i);
    return base + top_sum(cover_values(game, alpha), game.k_d);
}

bool threshold_conditions_hold(const SecurityGame& game, const MarginalProfile& profile)
{
    std::optional<Rational> c1_lo, c1_hi, c2_lo, c2_hi;
    auto raise = [](std::optional<Rational>& lo, const Rational& v) {
        if (!lo || v > *lo) lo = v;
    };
    auto lower = [](std::optional<Rational>& hi, const Rational& v) {
        if (!hi || v < *hi) hi = v;
    };
    for (int i = 0; i < game.m; ++i) {
        const Rational& a = profile.alpha(i);
        const Rational& b = profile.beta(i);
        Rational cover = a * game.delta_d(i);
        Rational w = game.uau(i) - b * game.delta_a(i);
        if (b > 0) lower(c2_hi, cover);
        if (b < 1) raise(c2_lo, cover);
        if (a > 0) lower(c1_hi, w);
        if (a < 1) raise(c1_lo, w);
    }
    bool c1_ok = !c1_lo || !c1_hi || *c1_lo <= *c1_hi;
    bool c2_ok = !c2_lo || !c2_hi || *c2_lo <= *c2_hi;
    return c1_ok && c2_ok;
}

Verdict verify_equilibrium(const SecurityGame& game, const MarginalProfile& profile)
{
    Outcomes out = expected_outcomes(game, profile);
    Verdict v;
    v.v_a = out.v_a;
    v.v_d = out.v_d;
    v.best_attacker = best_response_value_attacker(game, profile.beta);
    v.best_defender = best_response_value_defender(game, profile.alpha);
    bool attacker_ok = v.v_a == v.best_attacker;
    bool defender_ok = v.v_d == v.best_defender;
    v.passed = attacker_ok && defender_ok;
    if (!attacker_ok)
        v.witness = find_move(attack_values(game, profile.beta), profile.alpha, DeviationWitness::Player::attacker);
    else if (!defender_ok)
        v.witness = find_move(cover_values(game, profile.alpha), profile.beta, DeviationWitness::Player::defender);
    v.threshold_conditions = threshold_conditions_hold(game, profile);
    v.criteria_agree = v.threshold_conditions == v.passed;
    return v;
}

std::size_t binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

std::vector<std::vector<int>> k_subsets(int m, int k)
{
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

BimatrixView expand_bimatrix(
    int m, int k_a, int k_d,
    const std::function<std::pair<Rational, Rational>(const std::vector<int>&, const std::vector<int>&)>& payoff,
    std::size_t budget)
{
    std::size_t cells = binomial(m, k_a) * binomial(m, k_d);
    if (cells > budget)
        throw BudgetExceeded("bimatrix has " + std::to_string(cells) + " cells, budget is " + std::to_string(budget));
    BimatrixView view;
    view.attacker_sets = k_subsets(m, k_a);
    view.defender_sets = k_subsets(m, k_d);
    const auto rows = static_cast<Eigen::Index>(view.attacker_sets.size());
    const auto cols = static_cast<Eigen::Index>(view.defender_sets.size());
    view.A.resize(rows, cols);
    view.B.resize(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) {
            auto [a, b] = payoff(view.attacker_sets[static_cast<std::size_t>(i)],
                                 view.defender_sets[static_cast<std::size_t>(j)]);
            view.A(i, j) = a;
            view.B(i, j) = b;
        }
    return view;
}

BimatrixView expand_bimatrix(const SecurityGame& game, std::size_t budget)
{
    return expand_bimatrix(
        game.m, game.k_a, game.k_d,
        [&](const std::vector<int>& attacked, const std::vector<int>& covered) {
            Rational a, d;
            for (int i : attacked) {
                bool hit = std::binary_search(covered.begin(), covered.end(), i);
                a += hit ? game.uac(i) : game.uau(i);
                d += hit ? game.udc(i) : game.udu(i);
            }
            return std::pair{a, d};
        },
        budget);
}

VectorXr strategy_vector(const MixedStrategy& mixed, const std::vector<std::vector<int>>& sets)
{
    VectorXr out = VectorXr::Constant(static_cast<Eigen::Index>(sets.size()), Rational(0));
    for (const auto& [set, prob] : mixed.support) {
        std::vector<int> key = set;
        std::sort(key.begin(), key.end());
        auto it = std::lower_bound(sets.begin(), sets.end(), key);
        if (it == sets.end() || *it != key) throw InputError("mixed strategy uses a subset of the wrong size");
        out(static_cast<Eigen::Index>(it - sets.begin())) += prob;
    }
    return out;
}

namespace {

/** Mix on `support` making the opponent's payoffs on `opp` equal; nullopt if none is valid. */
std::optional<std::pair<VectorXr, Rational>> equalizer(const MatrixXr& M, const std::vector<int>& opp,
                                                       const std::vector<int>& support)
{
    const auto k = static_cast<Eigen::Index>(support.size());
    MatrixXr sys = MatrixXr::Zero(k + 1, k + 1);
    VectorXr rhs = VectorXr::Zero(k + 1);
    for (Eigen::Index a = 0; a < k; ++a) {
        for (Eigen::Index b = 0; b < k; ++b)
            sys(a, b) = M(opp[static_cast<std::size_t>(a)], support[static_cast<std::size_t>(b)]);
        sys(a, k) = Rational(-1);
    }
    for (Eigen::Index b = 0; b < k; ++b) sys(k, b) = Rational(1);
    rhs(k) = Rational(1);
    VectorXr sol;
    try {
        sol = solve_linear_system<Rational>(sys, rhs);
    } catch (const SingularMatrix&) {
        return std::nullopt;
    }
    for (Eigen::Index b = 0; b < k; ++b)
        if (sol(b) < 0) return std::nullopt;
    return std::pair{VectorXr(sol.head(k)), Rational(sol(k))};
}

}   // namespace

BimatrixEquilibrium support_enumeration(const MatrixXr& A, const MatrixXr& B, std::size_t budget)
{
    const int n = static_cast<int>(A.rows());
    const int p = static_cast<int>(A.cols());
    std::size_t pairs = 0;
    for (int k = 1; k <= std::min(n, p); ++k) {
        auto row_sets = k_subsets(n, k);
        auto col_sets = k_subsets(p, k);
        for (const auto& I : row_sets)
            for (const auto& J : col_sets) {
                if (++pairs > budget) throw BudgetExceeded("support enumeration budget exceeded");
                auto q = equalizer(A, I, J);
                if (!q) continue;
                MatrixXr Bt = B.transpose();
                auto pr = equalizer(Bt, J, I);
                if (!pr) continue;
                VectorXr col = VectorXr::Zero(p);
                VectorXr row = VectorXr::Zero(n);
                for (std::size_t b = 0; b < J.size(); ++b) col(J[b]) = q->first(static_cast<Eigen::Index>(b));
                for (std::size_t a = 0; a < I.size(); ++a) row(I[a]) = pr->first(static_cast<Eigen::Index>(a));
                VectorXr row_pay = A * col;
                VectorXr col_pay = B.transpose() * row;
                if (row_pay.maxCoeff() > q->second || col_pay.maxCoeff() > pr->second) continue;
                return {row, col, q->second, pr->second};
            }
    }
    throw InternalError("support enumeration found no equilibrium (degenerate game)");
}

}   // namespace secgame
