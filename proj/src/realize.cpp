#include "secgame/solver.hpp"

#include <algorithm>
#include <numeric>

namespace secgame {

MixedStrategy realize_marginals(const VectorXr& marginals, int k)
{
    const int m = static_cast<int>(marginals.size());
    for (int i = 0; i < m; ++i)
        if (marginals(i) < 0 || marginals(i) > 1)
            throw InputError("marginal " + std::to_string(i + 1) + " outside [0,1]");
    if (marginals.sum() != k) throw InputError("marginals must sum to the integer k = " + std::to_string(k));
    if (k < 0 || k > m) throw InputError("k out of range");

    MixedStrategy out;
    out.k = k;
    VectorXr residual = marginals;
    Rational weight = 1;
    std::vector<int> order(static_cast<std::size_t>(m));
    while (weight > 0) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return residual(a) > residual(b); });
        std::vector<int> pick(order.begin(), order.begin() + k);
        Rational c = weight;
        for (int i : pick) c = std::min(c, Rational(residual(i)));
        if (k < m) c = std::min(c, Rational(weight - residual(order[static_cast<std::size_t>(k)])));
        if (c <= 0) throw InternalError("marginal decomposition stalled");
        for (int i : pick) residual(i) -= c;
        weight -= c;
        std::sort(pick.begin(), pick.end());
        out.support.emplace_back(std::move(pick), c);
        if (static_cast<int>(out.support.size()) > m + 1) throw InternalError("marginal decomposition too long");
    }
    return out;
}

}   // namespace secgame
