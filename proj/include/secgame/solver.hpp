#pragma once

#include "secgame/candidates.hpp"

#include <cstddef>
#include <optional>

namespace secgame {

struct SweepStats
{
    std::size_t cells_evaluated = 0;
    std::size_t structural_rejects = 0;
    std::size_t infeasible_rejects = 0;
};

struct SolveOptions
{
    bool reverse_order = false;   ///< walk the (r, s, t, type) cells from the last one back
    bool validate_input = true;
};

/**
 * First feasible Type I cell in sweep order, or nullopt.  Reports the number
 * of cells visited through `stats`.
 */
std::optional<SolvedEquilibrium> sweep_type_one(const CandidateBuilder& builder, bool reverse = false,
                                                SweepStats* stats = nullptr);

/**
 * Nash equilibrium of a validated game.  Type I cells are tried first, then
 * the tied cover block (games with tied covered attacker payoffs), then
 * Type II.  Throws InternalError if nothing is found.
 */
SolvedEquilibrium solve_nash(const SecurityGame& game, const SolveOptions& options = {},
                             SweepStats* stats = nullptr);

/** Equilibrium with defended-but-unattacked targets; none unless k_d > k_a. */
std::optional<SolvedEquilibrium> construct_type2(const SecurityGame& game);

/**
 * Equilibrium for games whose largest covered attacker payoffs tie: the
 * m - k_d lowest-delta_d targets are attacked for sure and left uncovered,
 * the rest are covered and the attack mass spreads over the tied block.
 */
std::optional<SolvedEquilibrium> construct_tied_cover_block(const SecurityGame& game);

/** Expected outcomes from the per-type closed forms in c1, c2 and the partition. */
Outcomes closed_form_outcomes(const SecurityGame& game, const SolvedEquilibrium& eq);

/**
 * Decomposes marginals with integral sum k into at most m weighted k-subsets
 * by repeatedly peeling off the k largest residuals.
 */
MixedStrategy realize_marginals(const VectorXr& marginals, int k);

/** Multiplicity of an equilibrium found by solve_nash, re-checking the Type II exclusivity. */
Multiplicity multiplicity_report(const SecurityGame& game, const SolvedEquilibrium& eq);

}   // namespace secgame
