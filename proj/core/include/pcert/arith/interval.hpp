#pragma once

#include "pcert/arith/rational.hpp"

#include <string>

namespace pcert {

// Closed interval [lo, hi] with exact rational ends; lo == hi is a point.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(Rational l, Rational h);
    static Interval point(const Rational& x) { return Interval(x, x); }

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool is_degenerate() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& iv);

} // namespace pcert
