#include "secgame/subset_sum.hpp"

#include <stdexcept>

namespace secgame {

namespace {

Integer scaled(const Rational& v, const Integer& scale)
{
    Rational x = v * Rational(scale);
    if (denominator_of(x) != 1) throw std::invalid_argument("scale does not clear the denominator of " + format_rational(v));
    return numerator_of(x);
}

Integer lcm(const Integer& a, const Integer& b) { return a / boost::multiprecision::gcd(a, b) * b; }

}   // namespace

SubsetSumResult subset_sum_selections(const std::vector<std::pair<Rational, Rational>>& items,
                                      const Interval& target, const Integer& scale)
{
    if (scale <= 0) throw std::invalid_argument("scale must be positive");
    std::map<Integer, std::vector<int>> reach{{Integer(0), {}}};
    for (const auto& [a, b] : items) {
        const Integer sa = scaled(a, scale);
        const Integer sb = scaled(b, scale);
        std::map<Integer, std::vector<int>> next;
        for (const auto& [sum, pick] : reach) {
            for (int alt = 0; alt < 2; ++alt) {
                Integer key = sum + (alt == 0 ? sa : sb);
                if (next.count(key)) continue;
                std::vector<int> w = pick;
                w.push_back(alt);
                next.emplace(std::move(key), std::move(w));
            }
        }
        reach = std::move(next);
    }
    SubsetSumResult out;
    for (auto& [sum, pick] : reach)
        if (target.contains(Rational(sum, scale))) out.witnesses.emplace(sum, std::move(pick));
    out.feasible = !out.witnesses.empty();
    return out;
}

Integer primary_scale(const std::vector<ScoredItem>& items)
{
    Integer scale = 1;
    for (const auto& item : items)
        for (const auto& alt : item.alternatives) scale = lcm(scale, denominator_of(alt.first));
    return scale;
}

std::optional<std::vector<int>> scored_selection(const std::vector<ScoredItem>& items, const Interval& target,
                                                 const std::optional<Rational>& secondary_floor,
                                                 std::size_t* states)
{
    struct State
    {
        Rational secondary;
        std::vector<int> pick;
    };
    const Integer scale = primary_scale(items);
    std::map<Integer, State> reach{{Integer(0), State{}}};
    for (const auto& item : items) {
        std::map<Integer, State> next;
        for (const auto& [sum, st] : reach) {
            for (std::size_t alt = 0; alt < item.alternatives.size(); ++alt) {
                const auto& [p, q] = item.alternatives[alt];
                Integer key = sum + scaled(p, scale);
                Rational sec = st.secondary + q;
                auto it = next.find(key);
                if (it != next.end() && it->second.secondary >= sec) continue;
                std::vector<int> pick = st.pick;
                pick.push_back(static_cast<int>(alt));
                next.insert_or_assign(std::move(key), State{std::move(sec), std::move(pick)});
            }
        }
        reach = std::move(next);
        if (states) *states += reach.size();
    }
    for (auto& [sum, st] : reach) {
        if (!target.contains(Rational(sum, scale))) continue;
        if (secondary_floor && st.secondary <= *secondary_floor) continue;
        return std::move(st.pick);
    }
    return std::nullopt;
}

}   // namespace secgame
