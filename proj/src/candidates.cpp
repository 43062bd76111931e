#include "secgame/candidates.hpp"

#include <algorithm>
#include <stdexcept>

namespace secgame {

bool Interval::empty() const
{
    if (!lo || !hi) return false;
    if (lo->value > hi->value) return true;
    return lo->value == hi->value && !(lo->closed && hi->closed);
}

bool Interval::contains(const Rational& x) const
{
    if (lo && (x < lo->value || (x == lo->value && !lo->closed))) return false;
    if (hi && (x > hi->value || (x == hi->value && !hi->closed))) return false;
    return true;
}

void Interval::restrict_below(const Rational& v, bool closed)
{
    if (!lo || v > lo->value)
        lo = Endpoint{v, closed};
    else if (v == lo->value)
        lo->closed = lo->closed && closed;
}

void Interval::restrict_above(const Rational& v, bool closed)
{
    if (!hi || v < hi->value)
        hi = Endpoint{v, closed};
    else if (v == hi->value)
        hi->closed = hi->closed && closed;
}

void Interval::intersect(const Interval& other)
{
    if (other.lo) restrict_below(other.lo->value, other.lo->closed);
    if (other.hi) restrict_above(other.hi->value, other.hi->closed);
}

Rational Interval::representative() const
{
    if (lo && hi) return lo->value == hi->value ? lo->value : Rational((lo->value + hi->value) / 2);
    if (lo) return lo->value + 1;
    if (hi) return hi->value - 1;
    return Rational(0);
}

std::string Interval::str() const
{
    std::string out = lo ? (lo->closed ? "[" : "(") + format_rational(lo->value) : std::string("(-inf");
    out += ", ";
    out += hi ? format_rational(hi->value) + (hi->closed ? "]" : ")") : std::string("+inf)");
    return out;
}

std::string_view type_name(EquilibriumType type)
{
    switch (type) {
    case EquilibriumType::IAi: return "I.A.i";
    case EquilibriumType::IAii: return "I.A.ii";
    case EquilibriumType::IAiii: return "I.A.iii";
    case EquilibriumType::IBi: return "I.B.i";
    case EquilibriumType::IBii: return "I.B.ii";
    case EquilibriumType::IBiii: return "I.B.iii";
    case EquilibriumType::II: return "II";
    }
    return "?";
}

std::optional<EquilibriumType> parse_type(std::string_view name)
{
    for (EquilibriumType t : {EquilibriumType::IAi, EquilibriumType::IAii, EquilibriumType::IAiii,
                              EquilibriumType::IBi, EquilibriumType::IBii, EquilibriumType::IBiii,
                              EquilibriumType::II})
        if (type_name(t) == name) return t;
    return std::nullopt;
}

bool has_i6(EquilibriumType type)
{
    return type == EquilibriumType::IBi || type == EquilibriumType::IBii || type == EquilibriumType::IBiii;
}

bool has_i2(EquilibriumType type) { return type == EquilibriumType::IAii || type == EquilibriumType::IBii; }

bool has_i8(EquilibriumType type) { return type == EquilibriumType::IAiii || type == EquilibriumType::IBiii; }

std::string_view free_slot_name(FreeSlot slot)
{
    switch (slot) {
    case FreeSlot::none: return "none";
    case FreeSlot::alpha_j2: return "alpha_j2";
    case FreeSlot::alpha_j8: return "alpha_j8";
    case FreeSlot::beta_j6: return "beta_j6";
    }
    return "?";
}

std::string_view multiplicity_name(Multiplicity::Kind kind)
{
    switch (kind) {
    case Multiplicity::Kind::unique: return "unique";
    case Multiplicity::Kind::continuum: return "continuum";
    case Multiplicity::Kind::family: return "family";
    }
    return "?";
}

int TargetPartition::cell_of(int target) const
{
    for (int c = 1; c <= 9; ++c) {
        const auto& v = (*this)[c];
        if (std::find(v.begin(), v.end(), target) != v.end()) return c;
    }
    return 0;
}

void TargetPartition::normalize()
{
    for (auto& v : cells) std::sort(v.begin(), v.end());
}

namespace {

int level(const Rational& x)
{
    if (x == 0) return 0;
    if (x == 1) return 2;
    return 1;
}

}   // namespace

TargetPartition classify_profile(const SecurityGame& game, const MarginalProfile& profile)
{
    check_profile(game, profile);
    TargetPartition p;
    for (int i = 0; i < game.m; ++i)
        p[1 + level(profile.alpha(i)) + 3 * level(profile.beta(i))].push_back(i);
    return p;
}

CandidateBuilder::CandidateBuilder(const SecurityGame& game)
    : game_(game), orders_(canonical_orders(game)), delta_a_(game.delta_a()), delta_d_(game.delta_d())
{
}

bool AffineConditions::apply(const Affine& expr, Relation rel)
{
    if (expr.is_constant()) {
        const Rational& v = expr.constant;
        switch (rel) {
        case Relation::eq: return v == 0;
        case Relation::gt: return v > 0;
        case Relation::ge: return v >= 0;
        case Relation::lt: return v < 0;
        case Relation::le: return v <= 0;
        }
        return false;
    }
    // constant + slope * x (rel) 0  <=>  x (rel') root
    const Rational root = -expr.constant / expr.slope;
    const bool flip = expr.slope < 0;
    switch (rel) {
    case Relation::eq:
        interval.restrict_below(root, true);
        interval.restrict_above(root, true);
        break;
    case Relation::gt: flip ? interval.restrict_above(root, false) : interval.restrict_below(root, false); break;
    case Relation::ge: flip ? interval.restrict_above(root, true) : interval.restrict_below(root, true); break;
    case Relation::lt: flip ? interval.restrict_below(root, false) : interval.restrict_above(root, false); break;
    case Relation::le: flip ? interval.restrict_below(root, true) : interval.restrict_above(root, true); break;
    }
    return !interval.empty();
}

int CandidateBuilder::max_r() const { return std::min(game_.m - game_.k_a, game_.m - game_.k_d); }

int CandidateBuilder::max_s(int r) const { return std::min(game_.k_a, game_.m - game_.k_d - r); }

int CandidateBuilder::max_t(int s) const { return std::min(game_.k_a - s, game_.k_d); }

namespace {

Rejection structural(std::string reason) { return {Rejection::Kind::structural, std::move(reason)}; }

Rejection infeasible(std::string reason) { return {Rejection::Kind::infeasible, std::move(reason)}; }

/**
 * Moves the next `count` unused targets along `perm` into `cell`.  Fails when
 * too few remain or when the last pick ties with the next unused target.
 */
std::optional<Rejection> take(const std::vector<int>& perm, bool descending, const VectorXr& key, int count,
                              std::vector<char>& used, std::vector<int>& cell, const char* label)
{
    if (count == 0) return std::nullopt;
    const int m = static_cast<int>(perm.size());
    int taken = 0;
    int last = -1;
    int k = 0;
    for (; k < m && taken < count; ++k) {
        int i = perm[static_cast<std::size_t>(descending ? m - 1 - k : k)];
        if (used[static_cast<std::size_t>(i)]) continue;
        used[static_cast<std::size_t>(i)] = 1;
        cell.push_back(i);
        last = i;
        ++taken;
    }
    if (taken < count) return structural(std::string("not enough targets remain for ") + label);
    for (; k < m; ++k) {
        int i = perm[static_cast<std::size_t>(descending ? m - 1 - k : k)];
        if (used[static_cast<std::size_t>(i)]) continue;
        if (key(i) == key(last))
            return structural(std::string("ambiguous ordering: tied sort key at the ") + label + " boundary");
        break;
    }
    return std::nullopt;
}

}   // namespace

CandidateResult CandidateBuilder::build(int r, int s, int t, EquilibriumType type) const
{
    if (type == EquilibriumType::II) throw std::invalid_argument("type II has no (r,s,t) candidate");
    if (r < 0 || r > max_r() || s < 0 || s > max_s(r) || t < 0 || t > max_t(s))
        throw std::invalid_argument("(r,s,t) = (" + std::to_string(r) + "," + std::to_string(s) + "," +
                                    std::to_string(t) + ") outside the sweep bounds");
    const SecurityGame& g = game_;
    const int m = g.m;
    EquilibriumCandidate c;
    c.r = r;
    c.s = s;
    c.t = t;
    c.type = type;
    std::vector<char> used(static_cast<std::size_t>(m), 0);
    TargetPartition& p = c.partition;

    if (auto rej = take(orders_.perm_uau, false, g.uau, r, used, p[1], "I1")) return *rej;
    if (has_i2(type))
        if (auto rej = take(orders_.perm_uau, false, g.uau, 1, used, p[2], "I2")) return *rej;
    if (auto rej = take(orders_.perm_dd, false, delta_d_, s, used, p[3], "I3")) return *rej;
    if (has_i6(type))
        if (auto rej = take(orders_.perm_dd, false, delta_d_, 1, used, p[6], "I6")) return *rej;
    if (auto rej = take(orders_.perm_uac, true, g.uac, t, used, p[9], "I9")) return *rej;
    if (has_i8(type))
        if (auto rej = take(orders_.perm_uac, true, g.uac, 1, used, p[8], "I8")) return *rej;
    for (int i = 0; i < m; ++i)
        if (!used[static_cast<std::size_t>(i)]) p[5].push_back(i);
    p.normalize();
    if (!p[2].empty()) c.j2 = p[2][0];
    if (!p[6].empty()) c.j6 = p[6][0];
    if (!p[8].empty()) c.j8 = p[8][0];

    const auto& I5 = p[5];
    if (I5.empty() && type != EquilibriumType::IAi)
        return structural("I5 is empty; the indifference constants are undefined");

    Rational A, B, Cu;
    for (int i : I5) {
        A += 1 / delta_d_(i);
        B += 1 / delta_a_(i);
        Cu += g.uau(i) / delta_a_(i);
    }
    const Rational Ka = g.k_a - s - t;
    const Rational Kd = g.k_d - t;

    c.alpha.assign(static_cast<std::size_t>(m), Affine());
    c.beta.assign(static_cast<std::size_t>(m), Affine());
    auto alpha = [&](int i) -> Affine& { return c.alpha[static_cast<std::size_t>(i)]; };
    auto beta = [&](int i) -> Affine& { return c.beta[static_cast<std::size_t>(i)]; };
    for (int i : p[3]) alpha(i) = Rational(1);
    for (int i : p[9]) alpha(i) = beta(i) = Rational(1);
    for (int i : p[6]) alpha(i) = Rational(1);
    for (int i : p[8]) beta(i) = Rational(1);

    const Affine x = Affine::variable();
    switch (type) {
    case EquilibriumType::IAi:
        if (I5.empty()) {
            // Pure profile: pick the smallest constants compatible with the boundary cells.
            std::optional<Rational> c1;
            for (int i : p[1])
                if (!c1 || g.uau(i) > *c1) c1 = g.uau(i);
            if (!c1) {
                for (int i : p[3])
                    if (!c1 || g.uau(i) < *c1) c1 = g.uau(i);
                for (int i : p[9])
                    if (!c1 || g.uac(i) < *c1) c1 = g.uac(i);
            }
            std::optional<Rational> c2;
            if (!p[1].empty()) c2 = Rational(0);
            for (int i : p[3])
                if (!c2 || delta_d_(i) > *c2) c2 = delta_d_(i);
            if (!c2)
                for (int i : p[9])
                    if (!c2 || delta_d_(i) < *c2) c2 = delta_d_(i);
            c.c1 = c1.value_or(Rational(0));
            c.c2 = c2.value_or(Rational(0));
        } else {
            c.c1 = Affine((Cu - Kd) / B);
            c.c2 = Affine(Ka / A);
        }
        break;
    case EquilibriumType::IAii:
        c.c1 = Affine(g.uau(*c.j2));
        c.c2 = (Affine(Ka) - x) / A;
        alpha(*c.j2) = x;
        c.free_slot = FreeSlot::alpha_j2;
        break;
    case EquilibriumType::IAiii:
        c.c1 = Affine(g.uac(*c.j8));
        c.c2 = (Affine(Ka) - x) / A;
        alpha(*c.j8) = x;
        c.free_slot = FreeSlot::alpha_j8;
        break;
    case EquilibriumType::IBi:
        c.c2 = Affine(delta_d_(*c.j6));
        c.c1 = (Affine(Cu - Kd) + x) / B;
        beta(*c.j6) = x;
        c.free_slot = FreeSlot::beta_j6;
        break;
    case EquilibriumType::IBii:
        c.c1 = Affine(g.uau(*c.j2));
        c.c2 = Affine(delta_d_(*c.j6));
        alpha(*c.j2) = Affine(Ka - 1 - c.c2.constant * A);
        beta(*c.j6) = Affine(Kd - (Cu - c.c1.constant * B));
        break;
    case EquilibriumType::IBiii:
        c.c1 = Affine(g.uac(*c.j8));
        c.c2 = Affine(delta_d_(*c.j6));
        alpha(*c.j8) = Affine(Ka - 1 - c.c2.constant * A);
        beta(*c.j6) = Affine(Kd - 1 - (Cu - c.c1.constant * B));
        break;
    case EquilibriumType::II: break;
    }
    for (int i : I5) {
        alpha(i) = c.c2 / delta_d_(i);
        beta(i) = (Affine(g.uau(i)) - c.c1) / delta_a_(i);
    }
    return c;
}

CandidateResult construct_candidate(const SecurityGame& game, int r, int s, int t, EquilibriumType type)
{
    return CandidateBuilder(game).build(r, s, t, type);
}

namespace {

std::string tname(int i) { return "target " + std::to_string(i + 1); }

}   // namespace

FeasibilityResult check_feasibility(const SecurityGame& game, const EquilibriumCandidate& cand)
{
    const SecurityGame& g = game;
    const int m = g.m;
    AffineConditions cs;
    auto fail = [](std::string why) -> FeasibilityResult { return infeasible(std::move(why)); };

    std::vector<int> cells(static_cast<std::size_t>(m), 0);
    for (int c = 1; c <= 9; ++c)
        for (int i : cand.partition[c]) cells[static_cast<std::size_t>(i)] = c;

    Affine sum_alpha, sum_beta;
    for (int i = 0; i < m; ++i) {
        sum_alpha = sum_alpha + cand.alpha[static_cast<std::size_t>(i)];
        sum_beta = sum_beta + cand.beta[static_cast<std::size_t>(i)];
    }
    if (!cs.apply(sum_alpha - Affine(Rational(g.k_a)), Relation::eq)) return fail("sum of alpha differs from k_a");
    if (!cs.apply(sum_beta - Affine(Rational(g.k_d)), Relation::eq)) return fail("sum of beta differs from k_d");

    for (int i = 0; i < m; ++i) {
        const int cell = cells[static_cast<std::size_t>(i)];
        if (cell == 0) return fail(tname(i) + " is not assigned to a cell");
        const int a_level = (cell - 1) % 3;
        const int b_level = (cell - 1) / 3;
        const Affine& a = cand.alpha[static_cast<std::size_t>(i)];
        const Affine& b = cand.beta[static_cast<std::size_t>(i)];
        auto boundary = [&](const Affine& v, int lvl, const char* name) -> std::optional<std::string> {
            if (lvl == 1) {
                if (!cs.apply(v, Relation::gt) || !cs.apply(v - Affine(Rational(1)), Relation::lt))
                    return std::string(name) + " of " + tname(i) + " must lie strictly between 0 and 1";
            } else if (!cs.apply(v - Affine(Rational(lvl == 2 ? 1 : 0)), Relation::eq)) {
                return std::string(name) + " of " + tname(i) + " must equal " + (lvl == 2 ? "1" : "0");
            }
            return std::nullopt;
        };
        if (auto why = boundary(a, a_level, "alpha")) return fail(*why);
        if (auto why = boundary(b, b_level, "beta")) return fail(*why);
    }

    const VectorXr da = g.delta_a();
    const VectorXr dd = g.delta_d();
    for (int i = 0; i < m; ++i) {
        const int cell = cells[static_cast<std::size_t>(i)];
        const int a_level = (cell - 1) % 3;
        const int b_level = (cell - 1) / 3;
        const Affine& a = cand.alpha[static_cast<std::size_t>(i)];
        const Affine& b = cand.beta[static_cast<std::size_t>(i)];
        const Affine cover = a * dd(i) - cand.c2;
        const Affine w = Affine(g.uau(i)) - b * da(i) - cand.c1;
        if (b_level != 0 && !cs.apply(cover, Relation::ge))
            return fail(tname(i) + ": covered with alpha*delta_d below c2");
        if (b_level != 2 && !cs.apply(cover, Relation::le))
            return fail(tname(i) + ": left uncovered with alpha*delta_d above c2");
        if (a_level != 0 && !cs.apply(w, Relation::ge))
            return fail(tname(i) + ": attacked with attack value below c1");
        if (a_level != 2 && !cs.apply(w, Relation::le))
            return fail(tname(i) + ": spared with attack value above c1");
    }

    Rational x;
    SolvedEquilibrium eq;
    if (cand.free_slot != FreeSlot::none) {
        if (!cs.interval.lo || !cs.interval.hi) throw InternalError("free variable left unbounded");
        x = cs.interval.representative();
        eq.multiplicity.kind = cs.interval.is_point() ? Multiplicity::Kind::unique : Multiplicity::Kind::continuum;
        eq.multiplicity.variable = cand.free_slot;
        eq.multiplicity.target = cand.free_slot == FreeSlot::alpha_j2   ? *cand.j2
                                 : cand.free_slot == FreeSlot::alpha_j8 ? *cand.j8
                                                                        : *cand.j6;
        eq.multiplicity.interval = cs.interval;
        eq.multiplicity.representative = x;
        eq.multiplicity.description = std::string(free_slot_name(cand.free_slot)) + " of target " +
                                      std::to_string(eq.multiplicity.target + 1) + " ranges over " +
                                      cs.interval.str();
    } else {
        eq.multiplicity.kind = Multiplicity::Kind::unique;
        eq.multiplicity.description = "unique";
    }
    eq.profile.alpha.resize(m);
    eq.profile.beta.resize(m);
    for (int i = 0; i < m; ++i) {
        eq.profile.alpha(i) = cand.alpha[static_cast<std::size_t>(i)].at(x);
        eq.profile.beta(i) = cand.beta[static_cast<std::size_t>(i)].at(x);
    }
    eq.type = cand.type;
    eq.r = cand.r;
    eq.s = cand.s;
    eq.t = cand.t;
    eq.partition = cand.partition;
    eq.j2 = cand.j2;
    eq.j6 = cand.j6;
    eq.j8 = cand.j8;
    eq.c1 = cand.c1.at(x);
    eq.c2 = cand.c2.at(x);
    Outcomes out = expected_outcomes(g, eq.profile);
    eq.v_a = out.v_a;
    eq.v_d = out.v_d;
    return eq;
}

}   // namespace secgame
