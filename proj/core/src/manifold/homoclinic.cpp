#include "pcert/manifold/homoclinic.hpp"

#include "pcert/error.hpp"

namespace pcert {

namespace {

std::array<BigFloat, 2> evaluate(const std::array<Residual, 2>& f, const PlanarPoint& x)
{
    return {f[0](x), f[1](x)};
}

BigFloat norm(const std::array<BigFloat, 2>& v) { return max(abs(v[0]), abs(v[1])); }

} // namespace

NewtonResult newton2(const std::array<Residual, 2>& f, const PlanarPoint& start, unsigned digits, int max_iterations)
{
    const Precision p{digits};
    const BigFloat tol = pow10(p, -static_cast<long>(digits) + 10);
    const BigFloat h = pow10(p, -static_cast<long>(digits / 2));
    PlanarPoint x{BigFloat(p, start.a.to_rational()), BigFloat(p, start.b.to_rational())};
    std::array<BigFloat, 2> fx = evaluate(f, x);
    BigFloat res = norm(fx);

    for (int it = 0; it < max_iterations; ++it) {
        if (res < tol) {
            return {x, res, it};
        }
        const auto fa_hi = evaluate(f, {x.a + h, x.b});
        const auto fa_lo = evaluate(f, {x.a - h, x.b});
        const auto fb_hi = evaluate(f, {x.a, x.b + h});
        const auto fb_lo = evaluate(f, {x.a, x.b - h});
        const Mat2 J{(fa_hi[0] - fa_lo[0]) / (2 * h), (fb_hi[0] - fb_lo[0]) / (2 * h), (fa_hi[1] - fa_lo[1]) / (2 * h),
                     (fb_hi[1] - fb_lo[1]) / (2 * h)};
        const BigFloat det = J.det();
        if (det.is_zero()) {
            throw Error(Errc::NoConvergence, "singular Jacobian at iteration " + std::to_string(it));
        }
        const BigFloat da = (J.m22 * fx[0] - J.m12 * fx[1]) / det;
        const BigFloat db = (J.m11 * fx[1] - J.m21 * fx[0]) / det;

        BigFloat lambda(p, 1L);
        PlanarPoint next = x;
        std::array<BigFloat, 2> fn = fx;
        BigFloat rn = res;
        for (int halving = 0; halving <= 20; ++halving) {
            next = {x.a - lambda * da, x.b - lambda * db};
            try {
                fn = evaluate(f, next);
                rn = norm(fn);
                if (rn < res) {
                    break;
                }
            } catch (const Error& e) {
                if (e.code() != Errc::OnForbiddenLine) {
                    throw;
                }
            }
            lambda = lambda / 2;
        }
        if (!(rn < res)) {
            throw Error(Errc::NoConvergence,
                        "no decrease after 20 halvings, residual " + res.to_string(6) + " at iteration " +
                            std::to_string(it));
        }
        x = next;
        fx = fn;
        res = rn;
    }
    if (res < tol) {
        return {x, res, max_iterations};
    }
    throw Error(Errc::NoConvergence, std::to_string(max_iterations) + " iterations, residual " + res.to_string(6));
}

const ManifoldPoint& HomoclinicReport::point(const std::string& name) const
{
    for (const auto& p : points) {
        if (p.name == name) {
            return p;
        }
    }
    throw Error(Errc::StageFailed, "no point named " + name);
}

nlohmann::json HomoclinicReport::to_json(int digits) const
{
    nlohmann::json j;
    j["precision"] = precision.digits;
    j["order"] = order;
    j["normalization"] = normalization == EigenNormalization::UnitNorm ? "unit-norm" : "unit-first";
    j["lambda1"] = lambda1.to_string(digits);
    j["lambda2"] = lambda2.to_string(digits);
    nlohmann::json ws = nlohmann::json::object();
    for (std::size_t k = 0; k < w.size(); ++k) {
        ws["w" + std::to_string(k + 2)] = w[k].to_string(digits);
    }
    j["w"] = ws;
    j["jet_residual"] = jet_residual.to_string(6);
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : points) {
        pts.push_back({{"name", p.name},
                       {"system", p.system},
                       {"a", p.point.a.to_string(digits)},
                       {"b", p.point.b.to_string(digits)},
                       {"r", p.r.to_string(digits)},
                       {"residual", p.residual.to_string(6)},
                       {"iterations", p.iterations}});
    }
    j["points"] = pts;
    j["checks"] = {{"resolvent_G3P", resolvent_G3P.to_string(6)},
                   {"diagonal_G2P", diagonal_G2P.to_string(6)},
                   {"forbidden_GQm1", forbidden_GQm1.to_string(6)},
                   {"image_gap_Qm1", image_gap_Qm1.to_string(6)},
                   {"interleaved", interleaved}};
    return j;
}

HomoclinicReport homoclinic_report(Precision prec, unsigned order, EigenNormalization norm)
{
    const UnstableManifold m = landen_unstable_manifold(prec, order, norm);
    HomoclinicReport rep;
    rep.precision = prec;
    rep.order = order;
    rep.normalization = norm;
    rep.lambda1 = m.eigen.lambda1;
    rep.lambda2 = m.eigen.lambda2;
    for (unsigned k = 2; k <= order; ++k) {
        rep.w.push_back(m.jet.coefficient(k));
    }
    rep.jet_residual = m.jet.max_residual;

    const Residual d1 = [&m](const PlanarPoint& p) { return eval_D1(p, m); };
    const Residual forbidden = [](const PlanarPoint& p) { return p.a + p.b + 2; };
    auto solve = [&](const char* name, const char* system, const Residual& other, double a0, double b0) {
        const NewtonResult nr = newton2({d1, other}, PlanarPoint{BigFloat(prec, a0), BigFloat(prec, b0)}, prec.digits);
        rep.points.push_back({name, system, nr.point, manifold_parameter(nr.point, m), nr.residual, nr.iterations});
        return nr.point;
    };
    const PlanarPoint P = solve("P", "D1,D3", eval_D3, -5.7, 4.1);
    solve("P~", "D1,D3", eval_D3, -7.3, 4.3);
    const PlanarPoint Q = solve("Q", "D1,a+b+2", forbidden, -6.2, 4.2);
    const PlanarPoint Qm1 = solve("Q_-1", "D1,D4", eval_D4, -4.4, 4.0);

    const PlanarPoint g2 = g_map(g_map(P));
    rep.diagonal_G2P = abs(g2.a - g2.b);
    rep.resolvent_G3P = abs(resolvent(g_map(g2)));
    const PlanarPoint gq = g_map(Qm1);
    rep.forbidden_GQm1 = abs(gq.a + gq.b + 2);
    rep.image_gap_Qm1 = max(abs(gq.a - Q.a), abs(gq.b - Q.b));

    const BigFloat& rP = rep.point("P").r;
    const BigFloat& rQ = rep.point("Q").r;
    const BigFloat& rQm1 = rep.point("Q_-1").r;
    const bool neg = rQ < rP && rP < rQm1 && rQm1.sign() < 0;
    const bool pos = rQ > rP && rP > rQm1 && rQm1.sign() > 0;
    rep.interleaved = neg || pos;
    return rep;
}

std::vector<std::array<BigFloat, 3>> sample_manifold(const UnstableManifold& m, const BigFloat& r_min,
                                                     const BigFloat& r_max, int samples)
{
    std::vector<std::array<BigFloat, 3>> out;
    for (int k = 0; k < samples; ++k) {
        const BigFloat r = samples == 1 ? r_min : r_min + (r_max - r_min) * k / (samples - 1);
        const PlanarPoint q = param_Wu(r, m);
        out.push_back({r, q.a, q.b});
    }
    return out;
}

} // namespace pcert
