#pragma once

#include "secgame/rational.hpp"

#include <optional>
#include <string>

namespace secgame {

struct Endpoint
{
    Rational value;
    bool closed = false;
};

/** Interval of the rational line; a missing endpoint is unbounded. */
struct Interval
{
    std::optional<Endpoint> lo;
    std::optional<Endpoint> hi;

    static Interval open(const Rational& a, const Rational& b) { return {Endpoint{a, false}, Endpoint{b, false}}; }
    static Interval closed(const Rational& a, const Rational& b) { return {Endpoint{a, true}, Endpoint{b, true}}; }
    static Interval point(const Rational& a) { return closed(a, a); }
    static Interval everything() { return {}; }

    bool empty() const;
    bool contains(const Rational& x) const;
    bool is_point() const { return lo && hi && lo->value == hi->value && !empty(); }

    /** Tighten to x > v (or x >= v when closed). */
    void restrict_below(const Rational& v, bool closed);
    /** Tighten to x < v (or x <= v when closed). */
    void restrict_above(const Rational& v, bool closed);
    void intersect(const Interval& other);

    /** Midpoint of a bounded interval, the point itself for a degenerate one. */
    Rational representative() const;

    std::string str() const;
};

}   // namespace secgame
