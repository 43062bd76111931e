#include "secgame/projection.hpp"

#include "secgame/oracle.hpp"
#include "secgame/protective.hpp"
#include "secgame/solver.hpp"

#include <algorithm>

namespace secgame {

std::vector<std::vector<int>> SetFunctionTable::canonical_subsets(int m, int k)
{
    std::vector<std::vector<int>> out;
    for (int size = 0; size <= k; ++size)
        for (auto& s : k_subsets(m, size)) out.push_back(std::move(s));
    return out;
}

Rational SetFunctionTable::at(const std::vector<int>& subset) const
{
    auto it = values.find(subset);
    if (it != values.end()) return it->second;
    if (subset.empty()) return Rational(0);
    std::string name;
    for (int i : subset) name += (name.empty() ? "" : ",") + std::to_string(i + 1);
    throw InputError("incomplete table: no value for {" + name + "}");
}

std::vector<std::vector<int>> SetFunctionTable::missing(std::vector<std::string>* warnings) const
{
    std::vector<std::vector<int>> out;
    for (auto& s : canonical_subsets(m, k)) {
        if (values.count(s)) continue;
        if (s.empty()) {
            if (warnings) warnings->push_back("value of the empty set missing; using 0");
            continue;
        }
        out.push_back(std::move(s));
    }
    return out;
}

VectorXr vectorize(const SetFunctionTable& f)
{
    auto subsets = SetFunctionTable::canonical_subsets(f.m, f.k);
    VectorXr v(static_cast<Eigen::Index>(subsets.size()));
    for (std::size_t j = 0; j < subsets.size(); ++j) v(static_cast<Eigen::Index>(j)) = f.at(subsets[j]);
    return v;
}

SetFunctionTable additive_table(const VectorXr& x, int k)
{
    SetFunctionTable f;
    f.m = static_cast<int>(x.size());
    f.k = k;
    for (auto& s : SetFunctionTable::canonical_subsets(f.m, k)) {
        Rational sum;
        for (int i : s) sum += x(i);
        f.values.emplace(std::move(s), sum);
    }
    return f;
}

namespace {

Rational binomial_sum(int n, int upto)
{
    Rational sum;
    for (int t = 0; t <= upto; ++t) sum += Rational(static_cast<long>(binomial(n, t)));
    return sum;
}

}   // namespace

AdditiveProjection nearest_additive(const SetFunctionTable& f)
{
    if (f.m < 2 || f.k < 1 || f.k > f.m) throw InputError("projection needs m >= 2 and 1 <= k <= m");
    AdditiveProjection out;
    auto gaps = f.missing(&out.warnings);
    if (!gaps.empty()) f.at(gaps.front());
    const int m = f.m;
    // Gram matrix of the indicator vectors is (a - b) I + b 11'.
    const Rational a = binomial_sum(m - 1, f.k - 1);
    const Rational b = f.k >= 2 ? binomial_sum(m - 2, f.k - 2) : Rational(0);
    if (a <= b) throw InternalError("degenerate normal equations");
    out.gamma = VectorXr::Constant(m, Rational(0));
    for (const auto& s : SetFunctionTable::canonical_subsets(m, f.k)) {
        Rational v = f.at(s);
        for (int i : s) out.gamma(i) += v;
    }
    const Rational total = out.gamma.sum();
    const Rational shift = b * total / ((a - b) * (a - b + b * m));
    out.x.resize(m);
    for (int i = 0; i < m; ++i) out.x(i) = out.gamma(i) / (a - b) - shift;
    for (const auto& s : SetFunctionTable::canonical_subsets(m, f.k)) {
        Rational r = f.at(s);
        for (int i : s) r -= out.x(i);
        out.distance_sq += r * r;
    }
    return out;
}

SecurityGame nearest_additive_game(const NonAdditiveGame& game, std::vector<std::string>* warnings)
{
    for (const SetFunctionTable* t : {&game.uac, &game.uau, &game.udc, &game.udu})
        if (t->m != game.m || t->k != game.k_a)
            throw InputError("payoff tables must be on m targets at order k_a");
    auto project = [&](const SetFunctionTable& t) {
        AdditiveProjection p = nearest_additive(t);
        if (warnings) warnings->insert(warnings->end(), p.warnings.begin(), p.warnings.end());
        return p.x;
    };
    SecurityGame g;
    g.m = game.m;
    g.k_a = game.k_a;
    g.k_d = game.k_d;
    g.uac = project(game.uac);
    g.uau = project(game.uau);
    g.udc = project(game.udc);
    g.udu = project(game.udu);
    ValidationReport report = validate(g, {false, SignMode::permissive});
    if (!report.ok()) throw InputError("projected game is invalid: " + report.summary());
    return g;
}

ApproximationReport approximation_report(const NonAdditiveGame& original, const SecurityGame& projected,
                                         std::size_t budget)
{
    auto split = [](const std::vector<int>& attacked, const std::vector<int>& covered) {
        std::vector<int> hit, miss;
        for (int i : attacked) (std::binary_search(covered.begin(), covered.end(), i) ? hit : miss).push_back(i);
        return std::pair{hit, miss};
    };
    BimatrixView view = expand_bimatrix(
        original.m, original.k_a, original.k_d,
        [&](const std::vector<int>& attacked, const std::vector<int>& covered) {
            auto [hit, miss] = split(attacked, covered);
            return std::pair{Rational(original.uac.at(hit) + original.uau.at(miss)),
                             Rational(original.udc.at(hit) + original.udu.at(miss))};
        },
        budget);

    ApproximationReport rep;
    rep.zero_sum = view.B == MatrixXr(-view.A);
    VectorXr p, q;
    if (rep.zero_sum) {
        auto sol = solve_zero_sum_matrix<Rational>(view.A, budget);
        p = sol.row_mix;
        q = sol.col_mix;
    } else {
        auto sol = support_enumeration(view.A, view.B);
        p = sol.row_mix;
        q = sol.col_mix;
    }
    rep.original_defender_value = p.dot(view.B * q);

    SolvedEquilibrium eq = is_fully_protective(projected) ? solve_protective(projected) : solve_nash(projected);
    rep.projected_defender_value = eq.v_d;
    VectorXr q_bar = strategy_vector(realize_marginals(eq.profile.beta, projected.k_d), view.defender_sets);
    rep.cross_value = p.dot(view.B * q_bar);

    auto relative = [](const Rational& ref, const Rational& other) -> std::optional<Rational> {
        if (ref == 0) return std::nullopt;
        return Rational(abs(ref - other) / abs(ref));
    };
    rep.strategy_relative_error = relative(rep.original_defender_value, rep.cross_value);
    rep.value_relative_error = relative(rep.original_defender_value, rep.projected_defender_value);
    return rep;
}

}   // namespace secgame
