#pragma once

#include "secgame/candidates.hpp"
#include "secgame/subset_sum.hpp"

#include <array>
#include <cstdint>
#include <optional>

namespace secgame {

/** Two-point sets for each target's attacker payoffs. */
struct IntervalSpec
{
    std::vector<Rational> lb_uac, ub_uac, lb_uau, ub_uau;

    int m() const { return static_cast<int>(lb_uac.size()); }
};

struct DefenderPayoffs
{
    VectorXr udc;
    VectorXr udu;
};

enum class Bound : unsigned char { lb = 0, ub = 1 };

struct ParameterChoice
{
    std::vector<Bound> uac;
    std::vector<Bound> uau;

    /** Ordered by the uac selectors, then the uau selectors, lb before ub. */
    auto operator<=>(const ParameterChoice&) const = default;
};

struct ExploreStats
{
    std::array<std::size_t, 4> cells{};   ///< per class: both anchored, one anchored, none anchored, type II
    std::size_t cells_pruned = 0;
    std::size_t regions = 0;
    std::size_t dp_runs = 0;
    std::size_t dp_states = 0;
    std::size_t verified = 0;
    std::size_t verification_rejects = 0;
    std::size_t choices_solved = 0;
    std::size_t choices_skipped = 0;
};

struct OptimizationResult
{
    ParameterChoice best_choice;
    SecurityGame game;
    SolvedEquilibrium equilibrium;
    Rational v_d;
    ExploreStats explored;
};

struct OptimizerOptions
{
    bool prune = true;
};

/** Raised when no admissible choice has an equilibrium; a domain-level negative result. */
class NoFeasibleChoice : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

IntervalSpec fixed_spec(const SecurityGame& game);

SecurityGame game_for_choice(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                             const ParameterChoice& choice);

/** Every choice keeps uau > uac on each target. */
bool admissible(const IntervalSpec& spec, const ParameterChoice& choice);

/** Shape, bound order, sign and defender checks; separation is reported separately. */
ValidationReport check_interval_spec(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec);

/** uac intervals pairwise disjoint and uau intervals pairwise disjoint. */
bool intervals_separated(const IntervalSpec& spec);

/**
 * Pseudopolynomial maximization of the defender's equilibrium payoff over
 * two-point attacker payoffs.  Requires separated intervals.
 */
OptimizationResult optimize_pseudopoly(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                                       const OptimizerOptions& options = {});

/** Budget from SECGAME_BUDGET, else 2^24 choices. */
std::uint64_t default_budget();

/** Solves every admissible choice; ties go to the smallest choice. */
OptimizationResult optimize_exhaustive(const DefenderPayoffs& defender, int k_a, int k_d, const IntervalSpec& spec,
                                       std::optional<std::uint64_t> budget = std::nullopt);

}   // namespace secgame
