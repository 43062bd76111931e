#include "secgame/optimizer.hpp"

#include "secgame/protective.hpp"
#include "secgame/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace secgame {

IntervalSpec fixed_spec(const SecurityGame& game)
{
    IntervalSpec spec;
    for (int i = 0; i < game.m; ++i) {
        spec.lb_uac.push_back(game.uac(i));
        spec.ub_uac.push_back(game.uac(i));
        spec.lb_uau.push_back(game.uau(i));
        spec.ub_uau.push_back(game.uau(i));
    }
    return spec;
}

SecurityGame game_for_choice(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                             const ParameterChoice& choice)
{
    SecurityGame g;
    g.m = spec.m();
    g.k_a = k_a;
    g.k_d = k_d;
    g.uac.resize(g.m);
    g.uau.resize(g.m);
    for (int i = 0; i < g.m; ++i) {
        const auto k = static_cast<std::size_t>(i);
        g.uac(i) = choice.uac[k] == Bound::lb ? spec.lb_uac[k] : spec.ub_uac[k];
        g.uau(i) = choice.uau[k] == Bound::lb ? spec.lb_uau[k] : spec.ub_uau[k];
    }
    g.udc = defender.udc;
    g.udu = defender.udu;
    return g;
}

bool admissible(const IntervalSpec& spec, const ParameterChoice& choice)
{
    for (int i = 0; i < spec.m(); ++i) {
        const auto k = static_cast<std::size_t>(i);
        const Rational& c = choice.uac[k] == Bound::lb ? spec.lb_uac[k] : spec.ub_uac[k];
        const Rational& u = choice.uau[k] == Bound::lb ? spec.lb_uau[k] : spec.ub_uau[k];
        if (u <= c) return false;
    }
    return true;
}

ValidationReport check_interval_spec(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec)
{
    ValidationReport report;
    auto add = [&](std::string msg, std::vector<int> targets = {}) {
        report.violations.push_back({"interval", std::move(msg), std::move(targets)});
    };
    const int m = spec.m();
    const auto mu = static_cast<std::size_t>(m);
    if (spec.ub_uac.size() != mu || spec.lb_uau.size() != mu || spec.ub_uau.size() != mu ||
        defender.udc.size() != m || defender.udu.size() != m) {
        add("interval and defender payoff lists must all have m entries");
        return report;
    }
    if (k_a < 1 || k_a >= m) add("1 <= k_a < m required");
    if (k_d < 1 || k_d >= m) add("1 <= k_d < m required");
    std::set<Rational> dd;
    for (int i = 0; i < m; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const std::string t = std::to_string(i + 1);
        if (spec.lb_uac[k] > spec.ub_uac[k]) add("uac bounds of target " + t + " are reversed", {i + 1});
        if (spec.lb_uau[k] > spec.ub_uau[k]) add("uau bounds of target " + t + " are reversed", {i + 1});
        if (spec.lb_uac[k] < 0) add("uac of target " + t + " must be non-negative", {i + 1});
        if (spec.lb_uau[k] <= 0) add("uau of target " + t + " must be positive", {i + 1});
        if (defender.udc(i) > 0) add("udc of target " + t + " must be non-positive", {i + 1});
        if (defender.udu(i) >= 0) add("udu of target " + t + " must be negative", {i + 1});
        Rational d = defender.udc(i) - defender.udu(i);
        if (d <= 0) add("delta_d(" + t + ") must be positive", {i + 1});
        if (!dd.insert(d).second) add("distinctness assumption violated: repeated delta_d at target " + t, {i + 1});
    }
    return report;
}

bool intervals_separated(const IntervalSpec& spec)
{
    auto separated = [](const std::vector<Rational>& lo, const std::vector<Rational>& hi) {
        for (std::size_t i = 0; i < lo.size(); ++i)
            for (std::size_t j = i + 1; j < lo.size(); ++j)
                if (!(hi[i] < lo[j] || hi[j] < lo[i])) return false;
        return true;
    };
    return separated(spec.lb_uac, spec.ub_uac) && separated(spec.lb_uau, spec.ub_uau);
}

std::uint64_t default_budget()
{
    if (const char* env = std::getenv("SECGAME_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return std::uint64_t{1} << 24;
}

namespace {

struct Alt
{
    Bound c;
    Bound u;
    Rational uac;
    Rational uau;
};

/** Admissible (uac, uau) pairs of one target, in selector order. */
std::vector<Alt> target_alternatives(const IntervalSpec& spec, int i)
{
    const auto k = static_cast<std::size_t>(i);
    std::vector<Alt> out;
    for (Bound c : {Bound::lb, Bound::ub})
        for (Bound u : {Bound::lb, Bound::ub}) {
            if (c == Bound::ub && spec.ub_uac[k] == spec.lb_uac[k]) continue;
            if (u == Bound::ub && spec.ub_uau[k] == spec.lb_uau[k]) continue;
            Alt a{c, u, c == Bound::lb ? spec.lb_uac[k] : spec.ub_uac[k], u == Bound::lb ? spec.lb_uau[k] : spec.ub_uau[k]};
            if (a.uau > a.uac) out.push_back(std::move(a));
        }
    return out;
}

/** Possible values of c1: a single point, or an open gap between consecutive breakpoints. */
struct Region
{
    bool exact = false;
    Rational v;
    std::optional<Rational> a, b;
};

bool below(const Rational& p, const Region& R, bool strict)
{
    if (R.exact) return strict ? p < R.v : p <= R.v;
    return R.a && p <= *R.a;
}

bool above(const Rational& p, const Region& R, bool strict)
{
    if (R.exact) return strict ? p > R.v : p >= R.v;
    return R.b && p >= *R.b;
}

bool equal(const Rational& p, const Region& R) { return R.exact && p == R.v; }

std::vector<Region> open_and_point_regions(const std::vector<Rational>& breaks)
{
    std::vector<Region> out;
    std::optional<Rational> prev;
    for (const Rational& v : breaks) {
        out.push_back({false, Rational(0), prev, v});
        out.push_back({true, v, std::nullopt, std::nullopt});
        prev = v;
    }
    out.push_back({false, Rational(0), prev, std::nullopt});
    return out;
}

int class_of(EquilibriumType t)
{
    switch (t) {
    case EquilibriumType::IBii:
    case EquilibriumType::IBiii: return 0;
    case EquilibriumType::IAii:
    case EquilibriumType::IAiii:
    case EquilibriumType::IBi: return 1;
    case EquilibriumType::IAi: return 2;
    default: return 3;
    }
}

class Pseudopoly
{
  public:
    Pseudopoly(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec, const OptimizerOptions& opt)
        : def_(defender), k_a_(k_a), k_d_(k_d), spec_(spec), opt_(opt), m_(spec.m())
    {
        dd_ = defender.udc - defender.udu;
        for (int i = 0; i < m_; ++i) alts_.push_back(target_alternatives(spec, i));
        by_uau_ = order([&](int i) { return spec.lb_uau[static_cast<std::size_t>(i)]; });
        by_uac_ = order([&](int i) { return spec.lb_uac[static_cast<std::size_t>(i)]; });
        by_dd_ = order([&](int i) { return Rational(dd_(i)); });
        std::set<Rational> b;
        for (int i = 0; i < m_; ++i) {
            const auto k = static_cast<std::size_t>(i);
            b.insert(spec.lb_uac[k]);
            b.insert(spec.ub_uac[k]);
            b.insert(spec.lb_uau[k]);
            b.insert(spec.ub_uau[k]);
        }
        breaks_.assign(b.begin(), b.end());
    }

    void run()
    {
        static constexpr EquilibriumType kOrder[] = {EquilibriumType::IBii, EquilibriumType::IBiii,
                                                     EquilibriumType::IAii, EquilibriumType::IAiii,
                                                     EquilibriumType::IBi,  EquilibriumType::IAi};
        const int max_r = std::min(m_ - k_a_, m_ - k_d_);
        for (EquilibriumType type : kOrder)
            for (int r = 0; r <= max_r; ++r)
                for (int s = 0; s <= std::min(k_a_, m_ - k_d_ - r); ++s)
                    for (int t = 0; t <= std::min(k_a_ - s, k_d_); ++t) explore_cell(r, s, t, type);
        if (k_d_ > k_a_) explore_type_two();
    }

    std::optional<std::pair<Rational, ParameterChoice>> best;
    ExploreStats stats;

  private:
    template <typename Key>
    std::vector<int> order(Key key) const
    {
        std::vector<int> p(static_cast<std::size_t>(m_));
        std::iota(p.begin(), p.end(), 0);
        std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return key(a) < key(b); });
        return p;
    }

    std::optional<TargetPartition> partition(int r, int s, int t, EquilibriumType type) const
    {
        TargetPartition p;
        std::vector<char> used(static_cast<std::size_t>(m_), 0);
        auto take = [&](const std::vector<int>& perm, bool desc, int count, std::vector<int>& cell) {
            for (int k = 0; k < m_ && count > 0; ++k) {
                int i = perm[static_cast<std::size_t>(desc ? m_ - 1 - k : k)];
                if (used[static_cast<std::size_t>(i)]) continue;
                used[static_cast<std::size_t>(i)] = 1;
                cell.push_back(i);
                --count;
            }
            return count == 0;
        };
        if (!take(by_uau_, false, r, p[1])) return std::nullopt;
        if (has_i2(type) && !take(by_uau_, false, 1, p[2])) return std::nullopt;
        if (!take(by_dd_, false, s, p[3])) return std::nullopt;
        if (has_i6(type) && !take(by_dd_, false, 1, p[6])) return std::nullopt;
        if (!take(by_uac_, true, t, p[9])) return std::nullopt;
        if (has_i8(type) && !take(by_uac_, true, 1, p[8])) return std::nullopt;
        for (int i = 0; i < m_; ++i)
            if (!used[static_cast<std::size_t>(i)]) p[5].push_back(i);
        p.normalize();
        return p;
    }

    /** Defender-side conditions of a cell; they do not depend on the parameter choice. */
    bool defender_consistent(const TargetPartition& p, int s, int t, EquilibriumType type) const
    {
        if (p[5].empty()) return s + t == k_a_ && t == k_d_;
        Rational A;
        for (int i : p[5]) A += 1 / dd_(i);
        const Rational Ka = k_a_ - s - t;
        const Affine x = Affine::variable();
        std::vector<Affine> alpha(static_cast<std::size_t>(m_));
        Affine c2;
        for (int i : p[3]) alpha[static_cast<std::size_t>(i)] = Rational(1);
        for (int i : p[6]) alpha[static_cast<std::size_t>(i)] = Rational(1);
        for (int i : p[9]) alpha[static_cast<std::size_t>(i)] = Rational(1);
        switch (type) {
        case EquilibriumType::IAi: c2 = Affine(Ka / A); break;
        case EquilibriumType::IAii:
        case EquilibriumType::IAiii:
            c2 = (Affine(Ka) - x) / A;
            alpha[static_cast<std::size_t>(has_i2(type) ? p[2][0] : p[8][0])] = x;
            break;
        default:
            c2 = Affine(dd_(p[6][0]));
            if (type != EquilibriumType::IBi)
                alpha[static_cast<std::size_t>(has_i2(type) ? p[2][0] : p[8][0])] = Affine(Ka - 1 - c2.constant * A);
            break;
        }
        for (int i : p[5]) alpha[static_cast<std::size_t>(i)] = c2 / dd_(i);
        AffineConditions cs;
        Affine total;
        for (const Affine& a : alpha) total = total + a;
        if (!cs.apply(total - Affine(Rational(k_a_)), Relation::eq)) return false;
        for (int cell = 1; cell <= 9; ++cell)
            for (int i : p[cell]) {
                const Affine& a = alpha[static_cast<std::size_t>(i)];
                const int a_level = (cell - 1) % 3;
                const int b_level = (cell - 1) / 3;
                if (a_level == 1 && (!cs.apply(a, Relation::gt) || !cs.apply(a - Affine(Rational(1)), Relation::lt)))
                    return false;
                const Affine cover = a * dd_(i) - c2;
                if (b_level != 0 && !cs.apply(cover, Relation::ge)) return false;
                if (b_level != 2 && !cs.apply(cover, Relation::le)) return false;
            }
        return true;
    }

    std::vector<Region> regions(const TargetPartition& p, EquilibriumType type) const
    {
        std::vector<Region> out;
        auto anchored = [&](int j, bool use_uau) {
            const auto k = static_cast<std::size_t>(j);
            const Rational& lo = use_uau ? spec_.lb_uau[k] : spec_.lb_uac[k];
            const Rational& hi = use_uau ? spec_.ub_uau[k] : spec_.ub_uac[k];
            out.push_back({true, lo, std::nullopt, std::nullopt});
            if (hi != lo) out.push_back({true, hi, std::nullopt, std::nullopt});
        };
        if (has_i2(type))
            anchored(p[2][0], true);
        else if (has_i8(type))
            anchored(p[8][0], false);
        else
            out = open_and_point_regions(breaks_);
        return out;
    }

    bool allowed(const Alt& a, int cell, const Region& R) const
    {
        switch (cell) {
        case 1: return below(a.uau, R, false);
        case 2: return equal(a.uau, R);
        case 3: return above(a.uau, R, false);
        case 5: return below(a.uac, R, true) && above(a.uau, R, true);
        case 6: return above(a.uau, R, true);
        case 8: return equal(a.uac, R);
        case 9: return above(a.uac, R, false);
        default: return false;
        }
    }

    static Rational h(const Alt& a, const Rational& v) { return (a.uau - v) / (a.uau - a.uac); }

    void explore_cell(int r, int s, int t, EquilibriumType type)
    {
        auto part = partition(r, s, t, type);
        if (!part) return;
        const TargetPartition& p = *part;
        if (p[5].empty() && type != EquilibriumType::IAi) return;
        ++stats.cells[static_cast<std::size_t>(class_of(type))];
        if (opt_.prune && !defender_consistent(p, s, t, type)) {
            ++stats.cells_pruned;
            return;
        }
        const Rational K = k_d_ - t - static_cast<int>(p[8].size());
        for (const Region& R : regions(p, type)) {
            ++stats.regions;
            std::vector<std::vector<int>> ok(static_cast<std::size_t>(m_));
            bool blocked = false;
            for (int cell = 1; cell <= 9 && !blocked; ++cell)
                for (int i : p[cell]) {
                    const auto& list = alts_[static_cast<std::size_t>(i)];
                    for (std::size_t k = 0; k < list.size(); ++k)
                        if (allowed(list[k], cell, R)) ok[static_cast<std::size_t>(i)].push_back(static_cast<int>(k));
                    if (ok[static_cast<std::size_t>(i)].empty()) {
                        blocked = true;
                        break;
                    }
                }
            if (blocked) continue;
            std::vector<int> base(static_cast<std::size_t>(m_));
            for (int i = 0; i < m_; ++i) base[static_cast<std::size_t>(i)] = ok[static_cast<std::size_t>(i)].front();

            if (p[5].empty()) {
                if (K == 0 && try_choice(base, r, s, t, type)) return;
                continue;
            }
            if (!has_i6(type)) {
                if (auto pick = aggregate(p, ok, R, K, std::nullopt)) {
                    for (std::size_t k = 0; k < p[5].size(); ++k)
                        base[static_cast<std::size_t>(p[5][k])] = ok[static_cast<std::size_t>(p[5][k])][static_cast<std::size_t>((*pick)[k])];
                    if (try_choice(base, r, s, t, type)) return;
                }
                continue;
            }
            const int j6 = p[6][0];
            for (int k6 : ok[static_cast<std::size_t>(j6)]) {
                const Alt& a6 = alts_[static_cast<std::size_t>(j6)][static_cast<std::size_t>(k6)];
                if (auto pick = aggregate(p, ok, R, K, a6)) {
                    std::vector<int> choice = base;
                    choice[static_cast<std::size_t>(j6)] = k6;
                    for (std::size_t k = 0; k < p[5].size(); ++k)
                        choice[static_cast<std::size_t>(p[5][k])] = ok[static_cast<std::size_t>(p[5][k])][static_cast<std::size_t>((*pick)[k])];
                    if (try_choice(choice, r, s, t, type)) return;
                }
            }
        }
    }

    /**
     * Selection for the mixed block making the covering mass
     * sum_i (uau_i - c1) / delta_a_i consistent with the region.  `six`
     * carries the I6 target's payoffs for the B family.
     */
    std::optional<std::vector<int>> aggregate(const TargetPartition& p, const std::vector<std::vector<int>>& ok,
                                              const Region& R, const Rational& K, const std::optional<Alt>& six)
    {
        ++stats.dp_runs;
        std::vector<ScoredItem> items;
        auto build = [&](const std::optional<Rational>& prim, const std::optional<Rational>& sec) {
            items.clear();
            for (int i : p[5]) {
                ScoredItem item;
                for (int k : ok[static_cast<std::size_t>(i)]) {
                    const Alt& a = alts_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                    item.alternatives.emplace_back(h(a, *prim), sec ? h(a, *sec) : Rational(0));
                }
                items.push_back(std::move(item));
            }
        };
        if (R.exact) {
            build(R.v, std::nullopt);
            Interval target = Interval::point(K);
            if (six) {
                const Rational rho = (six->uau - R.v) / (six->uau - six->uac);
                target = Interval::open(K - 1, K);
                target.restrict_below(K - rho, true);
            }
            return scored_selection(items, target, std::nullopt, &stats.dp_states);
        }
        // Open gap (a, b): the covering mass is decreasing in c1, so a root inside
        // the gap needs the mass above the target at a and below it at b.
        Interval below_k;
        below_k.restrict_above(K, false);
        if (!R.b) {
            if (six) return std::nullopt;
            Interval above_k;
            above_k.restrict_below(K, false);
            build(*R.a, std::nullopt);
            return scored_selection(items, above_k, std::nullopt, &stats.dp_states);
        }
        if (!R.a) {
            build(*R.b, std::nullopt);
            return scored_selection(items, below_k, std::nullopt, &stats.dp_states);
        }
        Rational floor = K;
        if (six) floor = K - std::min(Rational(1), Rational((six->uau - *R.a) / (six->uau - six->uac)));
        build(*R.b, *R.a);
        return scored_selection(items, below_k, floor, &stats.dp_states);
    }

    ParameterChoice to_choice(const std::vector<int>& idx) const
    {
        ParameterChoice c;
        for (int i = 0; i < m_; ++i) {
            const Alt& a = alts_[static_cast<std::size_t>(i)][static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            c.uac.push_back(a.c);
            c.uau.push_back(a.u);
        }
        return c;
    }

    bool try_choice(const std::vector<int>& idx, int r, int s, int t, EquilibriumType type)
    {
        ParameterChoice choice = to_choice(idx);
        SecurityGame g = game_for_choice(def_, k_a_, k_d_, spec_, choice);
        CandidateResult cand = CandidateBuilder(g).build(r, s, t, type);
        if (auto* c = std::get_if<EquilibriumCandidate>(&cand)) {
            FeasibilityResult res = check_feasibility(g, *c);
            if (auto* eq = std::get_if<SolvedEquilibrium>(&res)) {
                ++stats.verified;
                record(eq->v_d, std::move(choice));
                return true;
            }
        }
        ++stats.verification_rejects;
        return false;
    }

    void record(const Rational& v_d, ParameterChoice choice)
    {
        if (!best || v_d > best->first || (v_d == best->first && choice < best->second))
            best = std::pair{v_d, std::move(choice)};
    }

    void explore_type_two()
    {
        ++stats.cells[3];
        std::vector<char> in9(static_cast<std::size_t>(m_), 0);
        for (int k = 0; k < k_a_; ++k) in9[static_cast<std::size_t>(by_uac_[static_cast<std::size_t>(m_ - 1 - k)])] = 1;
        const int low = by_uac_[static_cast<std::size_t>(m_ - k_a_)];
        for (std::size_t k = 0; k < alts_[static_cast<std::size_t>(low)].size(); ++k) {
            const Rational c1 = alts_[static_cast<std::size_t>(low)][k].uac;
            std::vector<int> idx(static_cast<std::size_t>(m_), 0);
            idx[static_cast<std::size_t>(low)] = static_cast<int>(k);
            // coverage each outside target needs so that its uncovered payoff stays at or below c1
            auto need = [&](const Alt& a) {
                return a.uau > c1 ? Rational((a.uau - c1) / (a.uau - a.uac)) : Rational(0);
            };
            Rational total = 0;
            bool dead = false;
            for (int i = 0; i < m_; ++i) {
                const auto& list = alts_[static_cast<std::size_t>(i)];
                if (list.empty()) dead = true;
                if (dead || in9[static_cast<std::size_t>(i)]) continue;
                std::size_t lowest = 0;
                for (std::size_t a = 1; a < list.size(); ++a)
                    if (need(list[a]) < need(list[lowest])) lowest = a;
                idx[static_cast<std::size_t>(i)] = static_cast<int>(lowest);
                total += need(list[lowest]);
            }
            if (dead || total > k_d_ - k_a_) continue;
            ParameterChoice choice = to_choice(idx);
            SecurityGame g = game_for_choice(def_, k_a_, k_d_, spec_, choice);
            SolvedEquilibrium eq = solve_nash(g, {false, true});
            ++stats.verified;
            record(eq.v_d, std::move(choice));
        }
    }

    const DefenderPayoffs& def_;
    int k_a_, k_d_;
    const IntervalSpec& spec_;
    OptimizerOptions opt_;
    int m_;
    VectorXr dd_;
    std::vector<std::vector<Alt>> alts_;
    std::vector<int> by_uau_, by_uac_, by_dd_;
    std::vector<Rational> breaks_;
};

OptimizationResult finish(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                          const ParameterChoice& choice, const Rational& v_d, const ExploreStats& stats)
{
    OptimizationResult out;
    out.best_choice = choice;
    out.game = game_for_choice(defender, k_a, k_d, spec, choice);
    out.equilibrium = is_fully_protective(out.game) ? solve_protective(out.game) : solve_nash(out.game);
    out.v_d = out.equilibrium.v_d;
    out.explored = stats;
    if (out.v_d != v_d) throw InternalError("optimizer payoff disagrees with the solver on the chosen game");
    return out;
}

void require_valid(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec)
{
    ValidationReport report = check_interval_spec(defender, k_a, k_d, spec);
    if (!report.ok()) throw InputError("invalid interval specification: " + report.summary());
}

}   // namespace

OptimizationResult optimize_pseudopoly(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                                       const OptimizerOptions& options)
{
    require_valid(defender, k_a, k_d, spec);
    if (!intervals_separated(spec))
        throw InputError("separation assumption violated: uac intervals and uau intervals must each be pairwise disjoint");
    for (int i = 0; i < spec.m(); ++i)
        if (spec.lb_uac[static_cast<std::size_t>(i)] <= 0)
            throw InputError("uac of target " + std::to_string(i + 1) + " must be positive");
    Pseudopoly search(defender, k_a, k_d, spec, options);
    search.run();
    if (!search.best) throw NoFeasibleChoice("no admissible parameter choice has a feasible equilibrium");
    return finish(defender, k_a, k_d, spec, search.best->second, search.best->first, search.stats);
}

OptimizationResult optimize_exhaustive(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                                       std::optional<std::uint64_t> budget)
{
    require_valid(defender, k_a, k_d, spec);
    const int m = spec.m();
    // free selectors in choice-vector order: all uac selectors, then all uau selectors
    std::vector<std::pair<bool, int>> free;
    for (int i = 0; i < m; ++i)
        if (spec.lb_uac[static_cast<std::size_t>(i)] != spec.ub_uac[static_cast<std::size_t>(i)]) free.emplace_back(false, i);
    for (int i = 0; i < m; ++i)
        if (spec.lb_uau[static_cast<std::size_t>(i)] != spec.ub_uau[static_cast<std::size_t>(i)]) free.emplace_back(true, i);
    const std::uint64_t limit = budget.value_or(default_budget());
    if (free.size() >= 63 || (std::uint64_t{1} << free.size()) > limit)
        throw BudgetExceeded("exhaustive search needs 2^" + std::to_string(free.size()) + " choices, budget is " +
                             std::to_string(limit));
    const std::uint64_t total = std::uint64_t{1} << free.size();
    ExploreStats stats;
    std::optional<std::pair<Rational, ParameterChoice>> best;
    const ValidationOptions vopt{true, SignMode::permissive};
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        ParameterChoice choice{std::vector<Bound>(static_cast<std::size_t>(m), Bound::lb),
                               std::vector<Bound>(static_cast<std::size_t>(m), Bound::lb)};
        for (std::size_t k = 0; k < free.size(); ++k) {
            if (!((mask >> (free.size() - 1 - k)) & 1u)) continue;
            auto& v = free[k].first ? choice.uau : choice.uac;
            v[static_cast<std::size_t>(free[k].second)] = Bound::ub;
        }
        if (!admissible(spec, choice)) {
            ++stats.choices_skipped;
            continue;
        }
        SecurityGame g = game_for_choice(defender, k_a, k_d, spec, choice);
        if (!validate(g, vopt).ok()) {
            ++stats.choices_skipped;
            continue;
        }
        ++stats.choices_solved;
        SolvedEquilibrium eq = is_fully_protective(g) ? solve_protective(g) : solve_nash(g, {false, false});
        if (!best || eq.v_d > best->first) best = std::pair{eq.v_d, std::move(choice)};
    }
    if (!best) throw NoFeasibleChoice("no admissible parameter choice");
    return finish(defender, k_a, k_d, spec, best->second, best->first, stats);
}

}   // namespace secgame
