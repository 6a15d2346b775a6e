#pragma once

#include "pcert/arith/interval.hpp"
#include "pcert/upoly/upoly.hpp"

#include <vector>

namespace pcert {

// Textbook chain p, p', -rem(p, p'), ... over Q.
std::vector<UPoly> sturm_sequence(const UPoly& p);

// Sign changes of the chain at x, zeros skipped.
int sturm_variations(const std::vector<UPoly>& chain, const Rational& x);

enum class EndpointPolicy {
    Exclude, // roots at lo or hi are silently left out of the open-interval count
    Throw,   // Error(EndpointIsRoot)
};

// Degree above which isolation and counting switch from Sturm chains to
// Descartes' rule of signs on Moebius-transformed polynomials.
inline constexpr int kSturmDegreeLimit = 48;

enum class IsolationMethod { Auto, Sturm, Descartes };

// Number of distinct real roots of p in the open interval (lo, hi).
int count_roots(const UPoly& p, const Rational& lo, const Rational& hi,
                EndpointPolicy policy = EndpointPolicy::Exclude, IsolationMethod method = IsolationMethod::Auto);

struct RootIsolation {
    // Open isolating intervals, sorted, pairwise disjoint; each holds one root.
    std::vector<Interval> intervals;
    // Rational roots hit exactly during bisection.
    std::vector<Rational> exact_roots;

    std::size_t root_count() const noexcept { return intervals.size() + exact_roots.size(); }
    // Every root as an interval (exact roots degenerate), sorted.
    std::vector<Interval> all_sorted() const;
};

// Isolates every distinct real root of p. Non-degenerate intervals have
// rational non-root ends and width <= max_width.
RootIsolation isolate_roots(const UPoly& p, const Rational& max_width,
                            IsolationMethod method = IsolationMethod::Auto);

// Shrinks an interval holding exactly one simple root of p, whose ends are not
// roots, until its width is <= max_width. Returns a degenerate interval when a
// bisection point is the root itself.
Interval refine_root(const UPoly& p, Interval iv, const Rational& max_width);

// Fujiwara bound rounded up to a power of two: every real root has |x| < bound.
Rational root_bound(const UPoly& p);

} // namespace pcert
