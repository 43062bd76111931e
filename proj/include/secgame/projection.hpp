#pragma once

#include "secgame/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace secgame {

/** Set function on all subsets of size <= k of {0..m-1}. */
struct SetFunctionTable
{
    int m = 0;
    int k = 0;
    std::map<std::vector<int>, Rational> values;   ///< sorted 0-based subsets

    /** Subsets of size <= k ordered by size, then lexicographically. */
    static std::vector<std::vector<int>> canonical_subsets(int m, int k);

    /** Value of a subset; the empty set reads as 0 when absent. */
    Rational at(const std::vector<int>& subset) const;

    /** Missing entries other than the empty set; the empty set is reported in `warnings`. */
    std::vector<std::vector<int>> missing(std::vector<std::string>* warnings = nullptr) const;
};

/** Coordinates of the table in canonical subset order. */
VectorXr vectorize(const SetFunctionTable& f);

/** Table of h(S) = sum_{i in S} x_i at order k (h of the empty set is 0). */
SetFunctionTable additive_table(const VectorXr& x, int k);

struct AdditiveProjection
{
    VectorXr x;
    Rational distance_sq;
    VectorXr gamma;   ///< gamma_i = sum of f(S) over listed S containing i
    std::vector<std::string> warnings;
};

/** Least-squares additive fit, solved exactly from the normal equations. */
AdditiveProjection nearest_additive(const SetFunctionTable& f);

/** Payoff set functions of a game with arbitrary (non-additive) payoffs. */
struct NonAdditiveGame
{
    int m = 0;
    int k_a = 0;
    int k_d = 0;
    SetFunctionTable uac, uau, udc, udu;
};

/** Additive game from the four projected payoff functions at order k_a. */
SecurityGame nearest_additive_game(const NonAdditiveGame& game, std::vector<std::string>* warnings = nullptr);

struct ApproximationReport
{
    Rational original_defender_value;    ///< p' B q at an equilibrium (p, q) of the original game
    Rational projected_defender_value;   ///< defender payoff at the additive game's equilibrium
    Rational cross_value;                ///< p' B q-bar, q-bar the additive game's defender strategy
    std::optional<Rational> strategy_relative_error;
    std::optional<Rational> value_relative_error;
    bool zero_sum = false;
};

/**
 * Compares the original game against its additive projection using exact
 * matrix-game solves of the original.
 */
ApproximationReport approximation_report(const NonAdditiveGame& original, const SecurityGame& projected,
                                         std::size_t budget = 10000);

}   // namespace secgame
