#pragma once

#include "secgame/candidates.hpp"

#include <cstddef>

namespace secgame {

struct ProtectiveStats
{
    std::size_t cells_evaluated = 0;
    std::size_t cells_pruned = 0;
    int max_t = 0;   ///< largest |I9| of any evaluated cell; the restricted sweep never sets it
};

/**
 * Equilibrium of a fully protective game (uac = udc = 0).  Sweeps (r, s)
 * over types I.A.i, I.A.ii, I.B.i, I.B.ii with I9 empty, then tries the
 * all-covered-but-attacked block.  Constants are reported with the general
 * sign convention (c2 = alpha * delta_d > 0).
 */
SolvedEquilibrium solve_protective(const SecurityGame& game, ProtectiveStats* stats = nullptr);

/** Closed-form outcomes of an equilibrium returned by solve_protective. */
Outcomes closed_form_outcomes_protective(const SecurityGame& game, const SolvedEquilibrium& eq);

struct SigmaAlphaEvaluation
{
    int r = 0;
    int s = 0;   ///< size of the top block by uau
    Rational alpha_r1;
    Rational c2;   ///< protective convention: alpha * udu, negative
    Rational value;
};

/**
 * Attack mass of a zero-sum protective profile whose lowest r targets are
 * spared, whose top s targets are mixed, and whose remaining targets are
 * attacked for sure except target r+1 with mass alpha_r1.  `sorted_uau`
 * must be ascending.
 */
SigmaAlphaEvaluation sigma_alpha(const VectorXr& sorted_uau, int r, int s, const Rational& alpha_r1,
                                 const Rational& c2);

/**
 * Linear scan for zero-sum protective games (uau = -udu): each top-block
 * size fixes the indifference constants, which pin the remaining counts.
 * Returns the same equilibrium as solve_protective.
 */
SolvedEquilibrium solve_zero_sum_protective(const SecurityGame& game, ProtectiveStats* stats = nullptr);

}   // namespace secgame
