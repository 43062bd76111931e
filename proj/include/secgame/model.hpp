#pragma once

#include "secgame/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace secgame {

/**
 * Additive security game with singleton schedules.  Targets are 0-indexed
 * internally; every report and document uses 1-based target numbers.
 */
struct SecurityGame
{
    int m = 0;
    int k_a = 0;
    int k_d = 0;
    VectorXr uac;   ///< attacker payoff when the attacked target is covered
    VectorXr uau;   ///< attacker payoff when the attacked target is uncovered
    VectorXr udc;   ///< defender payoff when the attacked target is covered
    VectorXr udu;   ///< defender payoff when the attacked target is uncovered

    Rational delta_a(int i) const { return uau(i) - uac(i); }
    Rational delta_d(int i) const { return udc(i) - udu(i); }
    VectorXr delta_a() const { return uau - uac; }
    VectorXr delta_d() const { return udc - udu; }
};

SecurityGame make_game(int k_a, int k_d, const std::vector<Rational>& uac,
                       const std::vector<Rational>& uau, const std::vector<Rational>& udc,
                       const std::vector<Rational>& udu);

struct MarginalProfile
{
    VectorXr alpha;
    VectorXr beta;
};

/** Distribution over k-subsets of targets (0-based). */
struct MixedStrategy
{
    int k = 0;
    std::vector<std::pair<std::vector<int>, Rational>> support;
};

/** Per-target probability of being in the drawn subset. */
VectorXr induced_marginals(const MixedStrategy& mixed, int m);

struct Outcomes
{
    Rational v_a;
    Rational v_d;
    bool operator==(const Outcomes&) const = default;
};

enum class SignMode { strict, permissive };

struct ValidationOptions
{
    bool require_distinct = true;
    SignMode signs = SignMode::strict;
};

struct Violation
{
    std::string code;
    std::string message;
    std::vector<int> targets;   ///< 1-based
};

struct ValidationReport
{
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/** Every violated game invariant; an empty report means the game is admissible. */
ValidationReport validate(const SecurityGame& game, const ValidationOptions& options = {});

/** True when every covered payoff is zero for both players. */
bool is_fully_protective(const SecurityGame& game);

/** True when the attacker's uncovered payoff mirrors the defender's loss on every target. */
bool is_zero_sum(const SecurityGame& game);

/** Throws InputError unless the profile has the right shape, range and sums. */
void check_profile(const SecurityGame& game, const MarginalProfile& profile);

Outcomes expected_outcomes(const SecurityGame& game, const MarginalProfile& profile);

/** Target permutations sorted ascending by each key (ties by index). */
struct CanonicalOrders
{
    std::vector<int> perm_uau;
    std::vector<int> perm_uac;
    std::vector<int> perm_dd;
    std::vector<int> perm_udu;
};

CanonicalOrders canonical_orders(const SecurityGame& game);

/** Parse and validate a game document; throws InputError with the full report. */
SecurityGame parse_game(std::string_view document, const ValidationOptions& options = {});
std::string serialize_game(const SecurityGame& game);

MarginalProfile parse_profile(std::string_view document);
std::string serialize_profile(const MarginalProfile& profile);

}   // namespace secgame
