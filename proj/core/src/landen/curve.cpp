#include "pcert/landen/curve.hpp"

#include "pcert/error.hpp"

namespace pcert {

namespace {

void exclude_near(const BigFloat& t, long value, const char* what)
{
    if (abs(t - value) < forbidden_guard(t.precision())) {
        throw Error(Errc::DomainExcluded, std::string(what) + " at t = " + std::to_string(value));
    }
}

} // namespace

PlanarPoint param_P(const BigFloat& t)
{
    exclude_near(t, 0, "P(t) undefined");
    const BigFloat t3 = t * t * t;
    return {(t3 + 4) / (t * t), (t3 + 16) / (4 * t)};
}

BigFloat param_P_inverse(const PlanarPoint& p)
{
    const BigFloat a2 = p.a * p.a;
    const BigFloat den = a2 * p.b - 4 * p.b * p.b + 3 * p.a;
    if (abs(den) < forbidden_guard(den.precision())) {
        throw Error(Errc::DomainExcluded, "P^-1 denominator vanishes at a = " + p.a.to_string(20));
    }
    return 4 * (a2 - 3 * p.b) / den;
}

BigFloat g_one_dim(const BigFloat& t)
{
    exclude_near(t, 0, "g undefined");
    exclude_near(t, -2, "g undefined");
    const BigFloat u = t + 2;
    const BigFloat q = real_cbrt((t * t + 4) * u * u / (t * t));
    const Precision prec = t.precision();
    return real_cbrt(BigFloat(prec, 4L)) * t / (u * u) * q * q;
}

BigFloat g_fixed_point(Precision prec)
{
    const BigFloat c = real_cbrt(86 + 6 * sqrt(BigFloat(prec, 177L)));
    const BigFloat two(prec, 2L);
    const BigFloat cbrt2 = real_cbrt(two);
    return -(4 * c + cbrt2 * c * c + 8 * cbrt2 * cbrt2) / (3 * c);
}

std::string StableSetClass::to_string() const
{
    switch (kind) {
    case ConvergesToP1:
        return "ConvergesToP1";
    case ConvergesToP2:
        return "ConvergesToP2";
    case HitsForbiddenLine:
        return "HitsForbiddenLine(" + std::to_string(steps) + ")";
    case Undetermined:
        break;
    }
    return "Undetermined(" + std::to_string(steps) + ")";
}

StableSetClass classify_stable_set(const PlanarPoint& start, int max_iters)
{
    const Precision prec = start.a.precision();
    const BigFloat on_curve = pow10(prec, -20);
    const BigFloat close = pow10(prec, -20);
    const BigFloat p = g_fixed_point(prec);
    const PlanarPoint p1{BigFloat(prec, 3L), BigFloat(prec, 3L)};
    const PlanarPoint p2 = param_P(p);
    const BigFloat guard = forbidden_guard(prec);

    auto near = [&](const PlanarPoint& x, const PlanarPoint& y) {
        return abs(x.a - y.a) < close && abs(x.b - y.b) < close;
    };

    PlanarPoint x = start;
    for (int k = 0; k <= max_iters; ++k) {
        if (abs(x.a + x.b + 2) < guard) {
            return {StableSetClass::HitsForbiddenLine, k};
        }
        if (near(x, p1)) {
            return {StableSetClass::ConvergesToP1, k};
        }
        if (near(x, p2)) {
            return {StableSetClass::ConvergesToP2, k};
        }
        if (abs(resolvent(x)) < on_curve) {
            try {
                BigFloat t = param_P_inverse(x);
                if (t < 0) {
                    const BigFloat tight = pow10(prec, -30);
                    for (int j = k; j <= max_iters; ++j) {
                        if (abs(t + 2) < guard) {
                            return {StableSetClass::HitsForbiddenLine, j};
                        }
                        if (abs(t - p) < tight) {
                            return {StableSetClass::ConvergesToP2, j};
                        }
                        t = g_one_dim(t);
                    }
                    return {StableSetClass::Undetermined, max_iters};
                }
            } catch (const Error& e) {
                if (e.code() != Errc::DomainExcluded) {
                    throw;
                }
            }
        }
        if (k == max_iters) {
            break;
        }
        x = g_map(x);
    }
    return {StableSetClass::Undetermined, max_iters};
}

bool IntervalDynamicsReport::passed(const BigFloat& tol) const
{
    return fixed_residual < tol && m_image_residual < tol && ell_residual < tol && ell_in_range && image_inside &&
           decreasing && sequences_monotone && m_final_gap < tol && ell_final_gap < tol && above_diagonal;
}

nlohmann::json IntervalDynamicsReport::to_json() const
{
    return {{"p", p.to_string(40)},
            {"m", m.to_string(40)},
            {"ell", ell.to_string(40)},
            {"fixed_residual", fixed_residual.to_string(6)},
            {"m_image_residual", m_image_residual.to_string(6)},
            {"ell_residual", ell_residual.to_string(6)},
            {"ell_in_range", ell_in_range},
            {"image_inside", image_inside},
            {"decreasing", decreasing},
            {"sequences_monotone", sequences_monotone},
            {"m_final_gap", m_final_gap.to_string(6)},
            {"ell_final_gap", ell_final_gap.to_string(6)},
            {"iterations", iterations},
            {"above_diagonal", above_diagonal}};
}

IntervalDynamicsReport verify_interval_dynamics(Precision prec, int iterations)
{
    const BigFloat p = g_fixed_point(prec);
    const BigFloat m = -4 - 2 * sqrt(BigFloat(prec, 3L));
    const BigFloat slack = pow10(prec, -static_cast<long>(prec.digits) + 10);

    // g is decreasing on (p, -2) from p down to -inf; bisect g(t) = m.
    BigFloat lo = p;
    BigFloat hi = BigFloat(prec, -2L) - pow10(prec, -10);
    for (int i = 0; i < static_cast<int>(prec.bits()) + 8; ++i) {
        BigFloat mid = (lo + hi) / 2;
        if (g_one_dim(mid) > m) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const BigFloat ell = (lo + hi) / 2;

    constexpr int samples = 200;
    bool image_inside = true;
    bool decreasing = true;
    const BigFloat step = pow10(prec, -static_cast<long>(prec.digits) / 3);
    for (int i = 0; i <= samples; ++i) {
        const BigFloat t = m + (ell - m) * i / samples;
        const BigFloat gt = g_one_dim(t);
        if (gt < m - slack || gt > BigFloat(prec, -4L) + slack) {
            image_inside = false;
        }
        if (i > 0 && i < samples) {
            const BigFloat slope = (g_one_dim(t + step) - g_one_dim(t - step)) / (2 * step);
            if (!(slope < 0)) {
                decreasing = false;
            }
        }
    }

    // m_k = g(ell_k), ell_k = g(m_{k-1})
    bool monotone = true;
    BigFloat mk = m;
    BigFloat lk = ell;
    for (int k = 1; k <= iterations; ++k) {
        const BigFloat l_next = g_one_dim(mk);
        const BigFloat m_next = g_one_dim(l_next);
        if (l_next > lk + slack || m_next < mk - slack) {
            monotone = false;
        }
        lk = l_next;
        mk = m_next;
    }

    bool above = true;
    for (int i = 0; i < samples; ++i) {
        const BigFloat t = -100 + (p + 100) * (2 * i + 1) / (2 * samples);
        if (!(g_one_dim(t) > t)) {
            above = false;
        }
    }

    return IntervalDynamicsReport{p,
                                  m,
                                  ell,
                                  abs(g_one_dim(p) - p),
                                  abs(g_one_dim(m) + 4),
                                  abs(g_one_dim(ell) - m),
                                  p < ell && ell < -2,
                                  image_inside,
                                  decreasing,
                                  monotone,
                                  abs(mk - p),
                                  abs(lk - p),
                                  iterations,
                                  above};
}

} // namespace pcert
