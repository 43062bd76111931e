#pragma once

#include "secgame/interval.hpp"
#include "secgame/model.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace secgame {

enum class EquilibriumType { IAi, IAii, IAiii, IBi, IBii, IBiii, II };

inline constexpr std::array<EquilibriumType, 6> kTypeOneOrder = {
    EquilibriumType::IAi, EquilibriumType::IAii, EquilibriumType::IAiii,
    EquilibriumType::IBi, EquilibriumType::IBii, EquilibriumType::IBiii};

std::string_view type_name(EquilibriumType type);
std::optional<EquilibriumType> parse_type(std::string_view name);

/** Types whose I6 cell holds a target. */
bool has_i6(EquilibriumType type);
/** Types whose I2 cell holds a target. */
bool has_i2(EquilibriumType type);
/** Types whose I8 cell holds a target. */
bool has_i8(EquilibriumType type);

/**
 * Nine-cell partition by (alpha, beta) status.  Cell index 1..9 reads
 * alpha in {0, interior, 1} fastest, then beta in {0, interior, 1}:
 * I1 = (0,0), I2 = (int,0), I3 = (1,0), I4 = (0,int), I5 = (int,int),
 * I6 = (1,int), I7 = (0,1), I8 = (int,1), I9 = (1,1).
 */
struct TargetPartition
{
    std::array<std::vector<int>, 9> cells;   ///< 0-based targets, ascending

    const std::vector<int>& operator[](int cell) const { return cells[static_cast<std::size_t>(cell - 1)]; }
    std::vector<int>& operator[](int cell) { return cells[static_cast<std::size_t>(cell - 1)]; }
    /** Cell 1..9 of a target, 0 if absent. */
    int cell_of(int target) const;
    void normalize();
    bool operator==(const TargetPartition&) const = default;
};

TargetPartition classify_profile(const SecurityGame& game, const MarginalProfile& profile);

/** c0 + c1 * x in the candidate's single free variable. */
struct Affine
{
    Rational constant;
    Rational slope;

    Affine() = default;
    Affine(Rational c) : constant(std::move(c)) {}
    Affine(Rational c, Rational s) : constant(std::move(c)), slope(std::move(s)) {}

    static Affine variable() { return {Rational(0), Rational(1)}; }
    bool is_constant() const { return slope == 0; }
    Rational at(const Rational& x) const { return constant + slope * x; }

    friend Affine operator+(const Affine& a, const Affine& b) { return {a.constant + b.constant, a.slope + b.slope}; }
    friend Affine operator-(const Affine& a, const Affine& b) { return {a.constant - b.constant, a.slope - b.slope}; }
    friend Affine operator*(const Affine& a, const Rational& k) { return {a.constant * k, a.slope * k}; }
    friend Affine operator/(const Affine& a, const Rational& k) { return {a.constant / k, a.slope / k}; }
};

enum class Relation { eq, gt, ge, lt, le };

/** Conjunction of affine conditions `expr rel 0`, narrowed to an interval of the variable. */
class AffineConditions
{
  public:
    /** False once the conjunction is unsatisfiable. */
    bool apply(const Affine& expr, Relation rel);

    Interval interval;
};

enum class FreeSlot { none, alpha_j2, alpha_j8, beta_j6 };

std::string_view free_slot_name(FreeSlot slot);

struct EquilibriumCandidate
{
    int r = 0;
    int s = 0;
    int t = 0;
    EquilibriumType type = EquilibriumType::IAi;
    TargetPartition partition;
    std::optional<int> j2, j6, j8;
    Affine c1;
    Affine c2;
    std::vector<Affine> alpha;
    std::vector<Affine> beta;
    FreeSlot free_slot = FreeSlot::none;
    std::optional<Interval> free_interval;
};

struct Rejection
{
    enum class Kind { structural, infeasible };
    Kind kind = Kind::infeasible;
    std::string reason;
};

struct Multiplicity
{
    enum class Kind { unique, continuum, family };
    Kind kind = Kind::unique;
    FreeSlot variable = FreeSlot::none;
    int target = -1;   ///< 0-based target carrying the free marginal
    Interval interval;
    Rational representative;
    std::string description;
};

std::string_view multiplicity_name(Multiplicity::Kind kind);

struct SolvedEquilibrium
{
    MarginalProfile profile;
    EquilibriumType type = EquilibriumType::IAi;
    int r = 0;
    int s = 0;
    int t = 0;
    TargetPartition partition;
    std::optional<int> j2, j6, j8;
    Rational c1;
    Rational c2;
    Rational v_a;
    Rational v_d;
    Multiplicity multiplicity;
};

using CandidateResult = std::variant<EquilibriumCandidate, Rejection>;
using FeasibilityResult = std::variant<SolvedEquilibrium, Rejection>;

/** Per-game caches shared by every cell of a sweep. */
class CandidateBuilder
{
  public:
    explicit CandidateBuilder(const SecurityGame& game);

    const SecurityGame& game() const { return game_; }
    const CanonicalOrders& orders() const { return orders_; }

    /** Throws std::invalid_argument when (r, s, t) lies outside the sweep bounds. */
    CandidateResult build(int r, int s, int t, EquilibriumType type) const;

    int max_r() const;
    int max_s(int r) const;
    int max_t(int s) const;

  private:
    SecurityGame game_;
    CanonicalOrders orders_;
    VectorXr delta_a_;
    VectorXr delta_d_;
};

CandidateResult construct_candidate(const SecurityGame& game, int r, int s, int t, EquilibriumType type);

FeasibilityResult check_feasibility(const SecurityGame& game, const EquilibriumCandidate& cand);

}   // namespace secgame
