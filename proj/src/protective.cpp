#include "secgame/protective.hpp"

#include "secgame/solver.hpp"

#include <algorithm>

namespace secgame {

namespace {

void require_protective(const SecurityGame& game)
{
    if (!is_fully_protective(game)) throw InputError("game is not fully protective");
    ValidationReport report = validate(game, {true, SignMode::permissive});
    if (!report.ok()) throw InputError("invalid game: " + report.summary());
}

int type_rank(EquilibriumType t)
{
    return static_cast<int>(std::find(kTypeOneOrder.begin(), kTypeOneOrder.end(), t) - kTypeOneOrder.begin());
}

/** Protective candidate for cell (r, s, type) with I9 empty. */
class ProtectiveCells
{
  public:
    explicit ProtectiveCells(const SecurityGame& game) : g_(game), orders_(canonical_orders(game)) {}

    int max_r() const { return std::min(g_.m - g_.k_a, g_.m - g_.k_d); }
    int max_s(int r) const { return std::min(g_.k_a, g_.m - g_.k_d - r); }

    std::optional<SolvedEquilibrium> evaluate(int r, int s, EquilibriumType type, ProtectiveStats* stats) const
    {
        if (r < 0 || r > max_r() || s < 0 || s > max_s(r)) return std::nullopt;
        if (stats) ++stats->cells_evaluated;
        const int m = g_.m;
        EquilibriumCandidate c;
        c.r = r;
        c.s = s;
        c.t = 0;
        c.type = type;
        std::vector<char> used(static_cast<std::size_t>(m), 0);
        auto take = [&](const std::vector<int>& perm, int count, std::vector<int>& cell) {
            for (int i : perm) {
                if (count == 0) break;
                if (used[static_cast<std::size_t>(i)]) continue;
                used[static_cast<std::size_t>(i)] = 1;
                cell.push_back(i);
                --count;
            }
            return count == 0;
        };
        TargetPartition& p = c.partition;
        if (!take(orders_.perm_uau, r, p[1])) return std::nullopt;
        if (has_i2(type) && !take(orders_.perm_uau, 1, p[2])) return std::nullopt;
        if (!take(orders_.perm_dd, s, p[3])) return std::nullopt;
        if (has_i6(type) && !take(orders_.perm_dd, 1, p[6])) return std::nullopt;
        for (int i = 0; i < m; ++i)
            if (!used[static_cast<std::size_t>(i)]) p[5].push_back(i);
        if (p[5].empty()) return std::nullopt;
        p.normalize();
        if (!p[2].empty()) c.j2 = p[2][0];
        if (!p[6].empty()) c.j6 = p[6][0];

        const int n5 = static_cast<int>(p[5].size());
        Rational H, D;
        for (int i : p[5]) {
            H += 1 / g_.uau(i);
            D += 1 / g_.udu(i);
        }
        const Affine x = Affine::variable();
        Affine c1, c2p;
        c.alpha.assign(static_cast<std::size_t>(m), Affine());
        c.beta.assign(static_cast<std::size_t>(m), Affine());
        for (int i : p[3]) c.alpha[static_cast<std::size_t>(i)] = Rational(1);
        switch (type) {
        case EquilibriumType::IAi:
            c1 = Affine(Rational(n5 - g_.k_d) / H);
            c2p = Affine(Rational(g_.k_a - s) / D);
            break;
        case EquilibriumType::IAii:
            c1 = Affine(g_.uau(*c.j2));
            c2p = (Affine(Rational(g_.k_a - s)) - x) / D;
            c.alpha[static_cast<std::size_t>(*c.j2)] = x;
            c.free_slot = FreeSlot::alpha_j2;
            break;
        case EquilibriumType::IBi:
            c2p = Affine(g_.udu(*c.j6));
            c1 = (Affine(Rational(n5 - g_.k_d)) + x) / H;
            c.alpha[static_cast<std::size_t>(*c.j6)] = Rational(1);
            c.beta[static_cast<std::size_t>(*c.j6)] = x;
            c.free_slot = FreeSlot::beta_j6;
            break;
        case EquilibriumType::IBii:
            c1 = Affine(g_.uau(*c.j2));
            c2p = Affine(g_.udu(*c.j6));
            c.alpha[static_cast<std::size_t>(*c.j2)] = Affine(Rational(g_.k_a - s - 1) - c2p.constant * D);
            c.alpha[static_cast<std::size_t>(*c.j6)] = Rational(1);
            c.beta[static_cast<std::size_t>(*c.j6)] = Affine(Rational(g_.k_d - n5) + c1.constant * H);
            break;
        default: throw std::invalid_argument("protective sweep covers I.A.i, I.A.ii, I.B.i and I.B.ii only");
        }
        for (int i : p[5]) {
            c.alpha[static_cast<std::size_t>(i)] = c2p / g_.udu(i);
            c.beta[static_cast<std::size_t>(i)] = Affine(Rational(1)) - c1 / g_.uau(i);
        }
        c.c1 = c1;
        c.c2 = Affine() - c2p;
        FeasibilityResult res = check_feasibility(g_, c);
        if (auto* eq = std::get_if<SolvedEquilibrium>(&res)) return std::move(*eq);
        return std::nullopt;
    }

  private:
    const SecurityGame& g_;
    CanonicalOrders orders_;
};

/** Closed test for the block where every covered target is attacked with positive mass. */
std::optional<SolvedEquilibrium> covered_block(const SecurityGame& game)
{
    if (game.k_a + game.k_d <= game.m) return std::nullopt;
    std::vector<int> order = canonical_orders(game).perm_udu;
    const Rational pivot = game.udu(order[static_cast<std::size_t>(game.k_d)]);
    Rational lhs;
    for (int k = 0; k < game.k_d; ++k) lhs += pivot / game.udu(order[static_cast<std::size_t>(k)]);
    if (lhs > game.k_a - game.m + game.k_d) return std::nullopt;
    auto eq = construct_tied_cover_block(game);
    if (!eq) throw InternalError("covered block passed its closed test but could not be built");
    return eq;
}

}   // namespace

SolvedEquilibrium solve_protective(const SecurityGame& game, ProtectiveStats* stats)
{
    require_protective(game);
    ProtectiveCells cells(game);
    static constexpr EquilibriumType kTypes[] = {EquilibriumType::IAi, EquilibriumType::IAii, EquilibriumType::IBi,
                                                 EquilibriumType::IBii};
    for (int r = 0; r <= cells.max_r(); ++r)
        for (int s = 0; s <= cells.max_s(r); ++s)
            for (EquilibriumType type : kTypes)
                if (auto eq = cells.evaluate(r, s, type, stats)) return std::move(*eq);
    if (auto eq = covered_block(game)) return std::move(*eq);
    throw InternalError("no equilibrium found");
}

Outcomes closed_form_outcomes_protective(const SecurityGame& game, const SolvedEquilibrium& eq)
{
    const TargetPartition& p = eq.partition;
    Rational s3u, s3d, H;
    for (int i : p[3]) {
        s3u += game.uau(i);
        s3d += game.udu(i);
    }
    for (int i : p[5]) H += 1 / game.uau(i);
    const int n5 = static_cast<int>(p[5].size());
    const int s = static_cast<int>(p[3].size());
    const Rational c2p = -eq.c2;
    Outcomes out;
    switch (eq.type) {
    case EquilibriumType::IAi:
        out.v_a = s3u + eq.c1 * (game.k_a - s);
        out.v_d = s3d + c2p * eq.c1 * H;
        break;
    case EquilibriumType::IAii: {
        int j2 = p[2].front();
        out.v_a = s3u + eq.c1 * (game.k_a - s);
        out.v_d = s3d - c2p * (game.k_d - n5) + eq.profile.alpha(j2) * game.udu(j2);
        break;
    }
    case EquilibriumType::IBi:
    case EquilibriumType::IBii: {
        int j6 = p[6].front();
        out.v_a = s3u + eq.c1 * (game.k_a - s - 1) + game.uau(j6) * (1 - eq.profile.beta(j6));
        out.v_d = s3d - c2p * (game.k_d - n5) + game.udu(j6);
        if (eq.type == EquilibriumType::IBii) {
            int j2 = p[2].front();
            out.v_d += eq.profile.alpha(j2) * game.udu(j2);
        }
        break;
    }
    case EquilibriumType::IAiii:
        if (!p[1].empty() || !p[5].empty()) throw InputError("unsupported protective I.A.iii shape");
        out.v_a = s3u;
        out.v_d = s3d;
        break;
    default: throw InputError("unsupported type for protective closed forms");
    }
    return out;
}

SigmaAlphaEvaluation sigma_alpha(const VectorXr& sorted_uau, int r, int s, const Rational& alpha_r1,
                                 const Rational& c2)
{
    const int m = static_cast<int>(sorted_uau.size());
    if (r < 0 || s < 0 || r + s + 1 > m) throw std::invalid_argument("sigma_alpha: counts out of range");
    SigmaAlphaEvaluation ev{r, s, alpha_r1, c2, Rational(m - (s + r + 1)) + alpha_r1};
    for (int k = m - s; k < m; ++k) ev.value -= c2 / sorted_uau(k);
    return ev;
}

SolvedEquilibrium solve_zero_sum_protective(const SecurityGame& game, ProtectiveStats* stats)
{
    require_protective(game);
    if (!is_zero_sum(game)) throw InputError("game is not zero-sum");
    const int m = game.m;
    const std::vector<int> perm = canonical_orders(game).perm_uau;
    VectorXr u(m);
    for (int k = 0; k < m; ++k) u(k) = game.uau(perm[static_cast<std::size_t>(k)]);
    ProtectiveCells cells(game);

    std::optional<SolvedEquilibrium> best;
    auto consider = [&](int r, int s, EquilibriumType type) {
        auto eq = cells.evaluate(r, s, type, stats);
        if (!eq) return;
        auto key = [](const SolvedEquilibrium& e) { return std::tuple(e.r, e.s, type_rank(e.type)); };
        if (!best || key(*eq) < key(*best)) best = std::move(eq);
    };

    Rational H;
    for (int n5 = 1; n5 <= m; ++n5) {
        const int L = m - n5;   // targets below the top block
        H += 1 / u(L);
        const Rational c1 = Rational(n5 - game.k_d) / H;

        if (c1 > 0) {
            int r0 = static_cast<int>(std::lower_bound(u.data(), u.data() + L, c1) - u.data());
            for (int r : {r0, r0 + 1}) {
                if (r > L || (r == r0 + 1 && (r0 >= L || u(r0) != c1))) continue;
                if (L > 0 && L - r > 0) {
                    // attack mass ranges over c2 in [u(L-1), u(L)) with alpha_{r+1} = 1
                    Rational lo = sigma_alpha(u, r, n5, 1, -u(L - 1)).value;
                    Rational hi = sigma_alpha(u, r, n5, 1, -u(L)).value;
                    if (game.k_a < lo || game.k_a >= hi) {
                        if (stats) ++stats->cells_pruned;
                        continue;
                    }
                }
                consider(r, L - r, EquilibriumType::IAi);
            }
            const Rational* hit = std::lower_bound(u.data(), u.data() + L, c1);
            if (hit != u.data() + L && *hit == c1) {
                int r = static_cast<int>(hit - u.data());
                consider(r, L - r - 1, EquilibriumType::IAii);
            }
        }
        if (L >= 1) {
            const Rational c2 = u(L - 1);
            const Rational y = game.k_a - 1 - c2 * H;
            if (denominator_of(y) == 1) {
                int s = static_cast<int>(numerator_of(y).convert_to<long>());
                if (s >= 0 && s <= L - 1) consider(L - 1 - s, s, EquilibriumType::IBi);
            } else if (y > 0) {
                Integer fl = numerator_of(y) / denominator_of(y);
                int s = static_cast<int>(fl.convert_to<long>());
                if (L - 2 - s >= 0) consider(L - 2 - s, s, EquilibriumType::IBii);
            }
        }
    }
    if (best) return std::move(*best);
    if (auto eq = covered_block(game)) return std::move(*eq);
    throw InternalError("no equilibrium found");
}

}   // namespace secgame
