#pragma once

#include "secgame/candidates.hpp"

#include <cstdint>
#include <optional>

namespace secgame {

/** Explicit mixed block: marginals, attacker deltas and defender covered payoffs. */
struct CoreOverride
{
    VectorXr alpha;
    VectorXr beta;
    VectorXr delta_a;
    VectorXr udc;
};

struct GeneratorRequest
{
    EquilibriumType type = EquilibriumType::IAi;
    int r = 0;
    int s = 0;
    int t = 0;   ///< ignored for type II, where |I9| = k_a
    int k_a = 1;
    int k_d = 1;
    Rational c1 = 1;
    Rational c2 = 1;   ///< ignored for type II
    std::uint64_t seed = 0;
    std::optional<CoreOverride> core;
};

/**
 * Game whose equilibrium has the requested type and cell counts.  The
 * mixed block is built first from the indifference constants, then boundary
 * targets are added on the correct side of each threshold.  Throws
 * InputError for unrealizable requests.
 */
SecurityGame generate(const GeneratorRequest& request);

}   // namespace secgame
