#pragma once

#include "secgame/interval.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace secgame {

/** Scaled sum -> one selection (alternative index per item) reaching it. */
struct SubsetSumResult
{
    bool feasible = false;
    std::map<Integer, std::vector<int>> witnesses;
};

/**
 * Every sum inside `target` reachable by picking one value of each
 * two-valued item, with a witness per sum.  Sums are kept as integers after
 * multiplying by `scale`, which must clear every item denominator.
 */
SubsetSumResult subset_sum_selections(const std::vector<std::pair<Rational, Rational>>& items,
                                      const Interval& target, const Integer& scale);

/** Item with any number of alternatives, each scored by (primary, secondary). */
struct ScoredItem
{
    std::vector<std::pair<Rational, Rational>> alternatives;
};

/** Least common multiple of the denominators of the primary scores. */
Integer primary_scale(const std::vector<ScoredItem>& items);

/**
 * Selection whose primary sum lies in `target` and whose secondary sum is
 * strictly above `secondary_floor` (when given).  Sparse dynamic program over
 * scaled primary sums keeping the largest secondary sum per state.
 */
std::optional<std::vector<int>> scored_selection(const std::vector<ScoredItem>& items, const Interval& target,
                                                 const std::optional<Rational>& secondary_floor,
                                                 std::size_t* states = nullptr);

}   // namespace secgame
