#pragma once

#include "secgame/generator.hpp"
#include "secgame/model.hpp"
#include "secgame/optimizer.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace secgame::testing {

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline std::vector<Rational> qs(std::initializer_list<long> values)
{
    std::vector<Rational> out;
    for (long v : values) out.emplace_back(v);
    return out;
}

inline VectorXr vec(std::vector<Rational> values) { return make_vector(values); }

inline SecurityGame golden_game()
{
    return make_game(3, 2, {q(2, 3), q(4, 5), q(1, 2), q(3, 4)}, {q(8, 7), q(6, 5), q(4, 3), q(2)},
                     qs({-1, -2, -3, -4}), {q(-8, 5), q(-27, 10), q(-39, 10), q(-24, 5)});
}

inline std::vector<Rational> protective_udu() { return qs({-5, -10, -7, -8, -4, -1}); }
inline std::vector<Rational> protective_lb_uau() { return qs({1, 2, 9, 4, 6, 10}); }
inline std::vector<Rational> protective_ub_uau() { return qs({7, 3, 13, 5, 8, 11}); }

inline SecurityGame protective_game(const std::vector<Rational>& uau)
{
    std::vector<Rational> zero(6, Rational(0));
    return make_game(2, 3, zero, uau, zero, protective_udu());
}

inline IntervalSpec protective_spec()
{
    std::vector<Rational> zero(6, Rational(0));
    return {zero, zero, protective_lb_uau(), protective_ub_uau()};
}

inline DefenderPayoffs protective_defender()
{
    std::vector<Rational> zero(6, Rational(0));
    return {make_vector(zero), make_vector(protective_udu())};
}

inline IntervalSpec five_target_spec()
{
    return {qs({10, 48, 5, 31, 25}), qs({17, 49, 9, 40, 29}), qs({20, 51, 41, 63, 90}), qs({35, 60, 42, 70, 95})};
}

inline DefenderPayoffs five_target_defender()
{
    return {make_vector(qs({-1, -4, -9, -3, -2})), make_vector(qs({-7, -6, -12, -8, -9}))};
}

/** Seeded source of small random rationals for property tests. */
class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    Rational rational(long lo, long hi, long den = 12)
    {
        return Rational(std::uniform_int_distribution<long>(lo * den, hi * den)(rng_), den);
    }

    /** n distinct rationals in [lo, hi]. */
    std::vector<Rational> distinct(int n, long lo, long hi, long den = 12)
    {
        std::vector<Rational> out;
        while (static_cast<int>(out.size()) < n) {
            Rational v = rational(lo, hi, den);
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
        }
        return out;
    }

    bool coin() { return integer(0, 1) == 1; }

    std::mt19937_64& engine() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

/** Fully protective game with distinct uau and udu. */
inline SecurityGame random_protective(Gen& gen, int m, int k_a, int k_d, bool zero_sum = false)
{
    std::vector<Rational> zero(static_cast<std::size_t>(m), Rational(0));
    std::vector<Rational> uau = gen.distinct(m, 1, 20);
    std::vector<Rational> udu;
    if (zero_sum)
        for (const Rational& u : uau) udu.push_back(-u);
    else
        for (const Rational& u : gen.distinct(m, 1, 20)) udu.push_back(-u);
    return make_game(k_a, k_d, zero, uau, zero, udu);
}

/** Random generator request across all seven types within the sweep bounds. */
inline GeneratorRequest random_request(Gen& gen, EquilibriumType type)
{
    GeneratorRequest req;
    req.type = type;
    req.seed = static_cast<std::uint64_t>(gen.integer(0, 1 << 30));
    req.c1 = gen.rational(1, 6);
    if (req.c1 == 0) req.c1 = 1;
    req.c2 = gen.rational(1, 6);
    if (req.c2 == 0) req.c2 = 1;
    if (type == EquilibriumType::II) {
        req.k_a = gen.integer(1, 3);
        req.k_d = req.k_a + gen.integer(1, 2);
        req.r = gen.integer(1, 2);
        return req;
    }
    const int n6 = has_i6(type) ? 1 : 0;
    const int n8 = has_i8(type) ? 1 : 0;
    req.t = gen.integer(0, 1);
    req.s = gen.integer(0, 2);
    req.r = gen.integer(0, 2);
    req.k_a = req.s + req.t + n6 + gen.integer(1, 2);
    req.k_d = req.t + n8 + gen.integer(1, 2);
    return req;
}

/** Random interval spec with separated uac and uau intervals and uac < uau per target. */
inline IntervalSpec random_separated_spec(Gen& gen, int m)
{
    IntervalSpec spec;
    std::vector<Rational> cuts = gen.distinct(2 * m, 1, 30, 4);
    std::sort(cuts.begin(), cuts.end());
    for (int i = 0; i < m; ++i) {
        spec.lb_uac.push_back(cuts[static_cast<std::size_t>(2 * i)]);
        spec.ub_uac.push_back(gen.coin() ? cuts[static_cast<std::size_t>(2 * i)] : cuts[static_cast<std::size_t>(2 * i + 1)]);
    }
    std::vector<Rational> ucuts = gen.distinct(2 * m, 31, 60, 4);
    std::sort(ucuts.begin(), ucuts.end());
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), gen.engine());
    spec.lb_uau.resize(static_cast<std::size_t>(m));
    spec.ub_uau.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const auto i = static_cast<std::size_t>(perm[static_cast<std::size_t>(k)]);
        spec.lb_uau[i] = ucuts[static_cast<std::size_t>(2 * k)];
        spec.ub_uau[i] = ucuts[static_cast<std::size_t>(2 * k + 1)];
    }
    return spec;
}

inline DefenderPayoffs random_defender(Gen& gen, int m)
{
    std::vector<Rational> udc, udu;
    std::vector<Rational> dd = gen.distinct(m, 1, 15, 4);
    for (int i = 0; i < m; ++i) {
        udc.push_back(-gen.rational(0, 10, 4));
        udu.push_back(udc.back() - dd[static_cast<std::size_t>(i)]);
    }
    return {make_vector(udc), make_vector(udu)};
}

}   // namespace secgame::testing
