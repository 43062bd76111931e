#include "secgame/generator.hpp"

#include <algorithm>
#include <random>

namespace secgame {

namespace {

class Draw
{
  public:
    explicit Draw(std::uint64_t seed) : rng_(seed) {}

    /** Rational strictly inside (lo, hi) on a fine grid. */
    Rational between(const Rational& lo, const Rational& hi)
    {
        std::uniform_int_distribution<int> pick(1, kGrid - 1);
        return lo + (hi - lo) * Rational(pick(rng_), kGrid);
    }

    template <typename T>
    void shuffle(std::vector<T>& v)
    {
        std::shuffle(v.begin(), v.end(), rng_);
    }

  private:
    static constexpr int kGrid = 997;
    std::mt19937_64 rng_;
};

/** n distinct values in (0,1) with the given sum (0 < sum < n). */
std::vector<Rational> spread(int n, const Rational& sum, Draw& draw)
{
    const Rational base = sum / n;
    if (n == 1) return {base};
    const Rational room = std::min(base, Rational(1 - base));
    const Rational w = draw.between(Rational(0), room / n);
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i) out.push_back(base + w * (2 * i - (n - 1)) / 2);
    draw.shuffle(out);
    return out;
}

struct Target
{
    Rational uac, uau, dd;
};

void check(bool ok, const std::string& why)
{
    if (!ok) throw InputError("unrealizable request: " + why);
}

SecurityGame assemble(std::vector<Target> targets, int k_a, int k_d, Draw& draw, const std::vector<Rational>* udc)
{
    SecurityGame g;
    g.m = static_cast<int>(targets.size());
    g.k_a = k_a;
    g.k_d = k_d;
    g.uac.resize(g.m);
    g.uau.resize(g.m);
    g.udc.resize(g.m);
    g.udu.resize(g.m);
    for (int i = 0; i < g.m; ++i) {
        const Target& t = targets[static_cast<std::size_t>(i)];
        g.uac(i) = t.uac;
        g.uau(i) = t.uau;
        g.udc(i) = udc ? (*udc)[static_cast<std::size_t>(i)] : Rational(-draw.between(Rational(1, 2), Rational(10)));
        g.udu(i) = g.udc(i) - t.dd;
    }
    return g;
}

SecurityGame type_two(const GeneratorRequest& q, Draw& draw)
{
    check(q.k_d > q.k_a, "type II needs k_d > k_a");
    check(q.k_a >= 1 && q.c1 > 0, "type II needs k_a >= 1 and c1 > 0");
    const int r = std::max(q.r, 1);
    const Rational& c1 = q.c1;
    std::vector<Target> ts;
    for (int k = 0; k < q.k_a; ++k) {
        Rational uac = k == 0 ? c1 : draw.between(c1, 2 * c1);
        ts.push_back({uac, draw.between(uac, uac + 2 * c1), draw.between(Rational(0), Rational(5))});
    }
    for (int k = 0; k < q.k_d - q.k_a; ++k) {
        Rational uac = draw.between(Rational(0), c1);
        ts.push_back({uac, draw.between(uac, uac + 2 * c1), draw.between(Rational(0), Rational(5))});
    }
    for (int k = 0; k < r; ++k) {
        Rational uau = draw.between(Rational(0), c1);
        ts.push_back({draw.between(Rational(0), uau), uau, draw.between(Rational(0), Rational(5))});
    }
    draw.shuffle(ts);
    return assemble(std::move(ts), q.k_a, q.k_d, draw, nullptr);
}

SecurityGame type_one(const GeneratorRequest& q, Draw& draw)
{
    const int n2 = has_i2(q.type) ? 1 : 0;
    const int n6 = has_i6(q.type) ? 1 : 0;
    const int n8 = has_i8(q.type) ? 1 : 0;
    const Rational& c1 = q.c1;
    const Rational& c2 = q.c2;
    check(c1 > 0 && c2 > 0, "c1 and c2 must be positive");
    check(q.r >= 0 && q.s >= 0 && q.t >= 0, "counts must be non-negative");
    check(q.t <= std::min(q.k_a - q.s, q.k_d), "t exceeds min(k_a - s, k_d)");
    check(q.k_a - q.s - q.t - n6 >= 1, "no attack mass left for the mixed block");
    check(q.k_d - q.t - n8 >= 1, "no defense mass left for the mixed block");

    const Rational x_side = (n2 || n8) ? draw.between(Rational(0), Rational(1)) : Rational(0);
    const Rational b6 = n6 ? draw.between(Rational(0), Rational(1)) : Rational(0);
    const Rational RA = q.k_a - q.s - q.t - n6 - x_side;
    const Rational RB = q.k_d - q.t - n8 - b6;

    std::vector<Rational> alpha, beta, delta_a;
    const std::vector<Rational>* udc = nullptr;
    std::vector<Rational> udc_core;
    int n5;
    if (q.core) {
        n5 = static_cast<int>(q.core->alpha.size());
        alpha = to_std_vector(q.core->alpha);
        beta = to_std_vector(q.core->beta);
        delta_a = to_std_vector(q.core->delta_a);
        udc_core = to_std_vector(q.core->udc);
        check(q.core->beta.size() == n5 && q.core->delta_a.size() == n5 && q.core->udc.size() == n5,
              "core vectors differ in length");
        check(q.core->alpha.sum() == RA && q.core->beta.sum() == RB, "core marginals do not match the requested sums");
    } else {
        n5 = std::max(q.k_a, q.k_d) + 1;
        for (;;) {
            const int m = q.r + n2 + q.s + n6 + q.t + n8 + n5;
            if (q.r <= std::min(m - q.k_a, m - q.k_d) && q.s <= std::min(q.k_a, m - q.k_d - q.r)) break;
            ++n5;
        }
        alpha = spread(n5, RA, draw);
        beta = spread(n5, RB, draw);
        for (int i = 0; i < n5; ++i)
            delta_a.push_back(draw.between(Rational(0), c1 / (1 - beta[static_cast<std::size_t>(i)])));
    }
    const int m = q.r + n2 + q.s + n6 + q.t + n8 + n5;
    check(q.k_a < m && q.k_d < m, "resource counts must stay below the target count");
    check(q.r <= std::min(m - q.k_a, m - q.k_d), "r exceeds the sweep bound");
    check(q.s <= std::min(q.k_a, m - q.k_d - q.r), "s exceeds the sweep bound");

    std::vector<Target> ts;
    std::vector<Rational> udc_all;
    const Rational dd_top = 4 * c2 + 1;
    auto add = [&](Target t) {
        ts.push_back(std::move(t));
        udc_all.push_back(-draw.between(Rational(1, 2), Rational(10)));
    };
    for (int i = 0; i < n5; ++i) {
        const auto k = static_cast<std::size_t>(i);
        Rational uau = c1 + beta[k] * delta_a[k];
        ts.push_back({uau - delta_a[k], uau, c2 / alpha[k]});
        udc_all.push_back(q.core ? udc_core[k] : Rational(-draw.between(Rational(1, 2), Rational(10))));
    }
    for (int k = 0; k < q.r; ++k) {
        Rational uau = draw.between(Rational(0), c1);
        add({draw.between(Rational(0), uau), uau, draw.between(Rational(0), dd_top)});
    }
    if (n2) add({draw.between(Rational(0), c1), c1, draw.between(Rational(0), c2 / x_side)});
    for (int k = 0; k < q.s; ++k) {
        Rational uau = draw.between(c1, 3 * c1);
        add({draw.between(Rational(0), uau), uau, draw.between(Rational(0), c2)});
    }
    if (n6) {
        Rational uau = draw.between(c1, 3 * c1);
        Rational da = draw.between(Rational(0), std::min(uau, Rational((uau - c1) / b6)));
        add({uau - da, uau, c2});
    }
    for (int k = 0; k < q.t; ++k) {
        Rational uac = draw.between(c1, 3 * c1);
        add({uac, draw.between(uac, uac + 2 * c1), draw.between(c2, dd_top)});
    }
    if (n8) add({c1, draw.between(c1, 3 * c1), draw.between(c2 / x_side, c2 / x_side + dd_top)});

    // interleave target positions so the index order carries no information
    std::vector<std::size_t> perm(ts.size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    if (!q.core) draw.shuffle(perm);
    std::vector<Target> shuffled;
    std::vector<Rational> udc_shuffled;
    for (std::size_t i : perm) {
        shuffled.push_back(ts[i]);
        udc_shuffled.push_back(udc_all[i]);
    }
    udc = &udc_shuffled;
    return assemble(std::move(shuffled), q.k_a, q.k_d, draw, udc);
}

}   // namespace

SecurityGame generate(const GeneratorRequest& request)
{
    Draw draw(request.seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        SecurityGame g = request.type == EquilibriumType::II ? type_two(request, draw) : type_one(request, draw);
        if (validate(g).ok()) return g;
        if (request.core) throw InputError("unrealizable request: " + validate(g).summary());
    }
    throw InputError("unrealizable request: could not draw distinct payoffs");
}

}   // namespace secgame
