#pragma once

#include "pcert/landen/map.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace pcert {

// Rational parametrization of the resolvent curve: P(t) = ((t^3+4)/t^2, (t^3+16)/(4t)).
// t < 0 traces the branch through (-1, -1) and the saddle, t > 0 the branch with the cusp.
PlanarPoint param_P(const BigFloat& t);
// 4(a^2 - 3b) / (a^2 b - 4b^2 + 3a). Throws Error(DomainExcluded) on a zero denominator.
BigFloat param_P_inverse(const PlanarPoint& p);

// G restricted to the curve in the t coordinate. Throws Error(DomainExcluded) at t = 0, -2.
BigFloat g_one_dim(const BigFloat& t);

// The fixed point of g on t < 0, from its radical form (about -4.4111).
BigFloat g_fixed_point(Precision prec);

struct StableSetClass {
    enum Kind { ConvergesToP1, ConvergesToP2, HitsForbiddenLine, Undetermined };
    Kind kind = Undetermined;
    int steps = 0; // iterations used; for HitsForbiddenLine, the index of the bad iterate

    std::string to_string() const;
};

// Numeric only. Iterates G; once an iterate sits on the t < 0 branch of the
// curve (|R| < 1e-20) the iteration continues with g in the t coordinate.
StableSetClass classify_stable_set(const PlanarPoint& p, int max_iters);

struct IntervalDynamicsReport {
    BigFloat p, m, ell;
    BigFloat fixed_residual;   // |g(p) - p|
    BigFloat m_image_residual; // |g(m) + 4|
    BigFloat ell_residual;     // |g(ell) - m|
    bool ell_in_range = false; // p < ell < -2
    bool image_inside = false; // sampled g([m, ell]) within [m, -4]
    bool decreasing = false;   // sampled g' < 0 inside (m, ell)
    bool sequences_monotone = false;
    BigFloat m_final_gap, ell_final_gap; // |m_k - p|, |ell_k - p| after the last step
    int iterations = 0;
    bool above_diagonal = false; // sampled g(t) > t on (-100, p)

    bool passed(const BigFloat& tol) const;
    nlohmann::json to_json() const;
};

IntervalDynamicsReport verify_interval_dynamics(Precision prec = kDefaultPrecision, int iterations = 200);

} // namespace pcert
