#include "pcert/manifold/manifold.hpp"

#include "pcert/error.hpp"
#include "pcert/landen/periodic.hpp"

namespace pcert {

namespace {

BigFloat negligible(Precision p) { return pow10(p, -static_cast<long>(p.digits) + 10); }

// Eigenvector of m for eigenvalue l.
std::array<BigFloat, 2> eigenvector(const Mat2& m, const BigFloat& l, EigenNormalization norm)
{
    const BigFloat r11 = m.m11 - l;
    const BigFloat r22 = m.m22 - l;
    // Kernel of the row with the larger entries.
    BigFloat x = m.m12;
    BigFloat y = -r11;
    if (max(abs(m.m21), abs(r22)) > max(abs(r11), abs(m.m12))) {
        x = -r22;
        y = m.m21;
    }
    const BigFloat scale = max(abs(x), abs(y));
    if (scale.is_zero()) {
        throw Error(Errc::NotHyperbolicSaddle, "degenerate eigenspace");
    }
    if (norm == EigenNormalization::UnitNorm) {
        BigFloat n = sqrt(x * x + y * y);
        if ((abs(x) >= abs(y) ? x : y).sign() < 0) {
            n = -n;
        }
        return {x / n, y / n};
    }
    if (abs(x) > scale * negligible(l.precision())) {
        return {x / x, y / x};
    }
    return {x / y, y / y};
}

} // namespace

Mat2 inverse(const Mat2& m)
{
    const BigFloat d = m.det();
    if (d.is_zero()) {
        throw Error(Errc::SingularMatrix, "2x2 inverse");
    }
    return {m.m22 / d, -m.m12 / d, -m.m21 / d, m.m11 / d};
}

Eigen2 eigen2(const Mat2& m, EigenNormalization norm)
{
    const BigFloat tr = m.trace();
    const BigFloat disc = tr * tr - 4 * m.det();
    if (disc.sign() <= 0) {
        throw Error(Errc::NotHyperbolicSaddle, "eigenvalues are not real and distinct");
    }
    const BigFloat root = sqrt(disc);
    BigFloat l1 = (tr + root) / 2;
    BigFloat l2 = (tr - root) / 2;
    if (abs(l2) > abs(l1)) {
        std::swap(l1, l2);
    }
    const BigFloat one(m.m11.precision(), 1L);
    const BigFloat eps = negligible(m.m11.precision());
    if (!(abs(l1) > one + eps) || !(abs(l2) < one - eps)) {
        throw Error(Errc::NotHyperbolicSaddle,
                    "eigenvalues " + l1.to_string(12) + " and " + l2.to_string(12) + " are not a saddle pair");
    }
    const auto v1 = eigenvector(m, l1, norm);
    const auto v2 = eigenvector(m, l2, norm);
    const Mat2 L{v1[0], v2[0], v1[1], v2[1]};
    return {l1, l2, L, inverse(L)};
}

std::array<Jet2, 2> g_map_jet(const Jet2& a, const Jet2& b)
{
    const Jet2 s = a + b + BigFloat(a.precision(), 2L);
    const Jet2 num = a * b + (a + b) * BigFloat(a.precision(), 5L) + BigFloat(a.precision(), 9L);
    return {num * cbrt_power(s, -4), (s + BigFloat(a.precision(), 4L)) * cbrt_power(s, -2)};
}

ConjugatedJet conjugated_jet(const JetMap& map, const PlanarPoint& center, const Eigen2& e, unsigned order)
{
    const Precision p = e.lambda1.precision();
    const Jet2 r = Jet2::variable(order, 0, p);
    const Jet2 s = Jet2::variable(order, 1, p);
    const Jet2 a = r * e.L.m11 + s * e.L.m12 + center.a;
    const Jet2 b = r * e.L.m21 + s * e.L.m22 + center.b;
    auto img = map(a, b);
    img[0] = img[0] + (-center.a);
    img[1] = img[1] + (-center.b);
    return {e.lambda1, e.lambda2, img[0] * e.L_inv.m11 + img[1] * e.L_inv.m12,
            img[0] * e.L_inv.m21 + img[1] * e.L_inv.m22};
}

ConjugatedJet conjugated_jet(const PlanarPoint& center, const Eigen2& e, unsigned order)
{
    return conjugated_jet(g_map_jet, center, e, order);
}

BigFloat ManifoldJet::eval(const BigFloat& x) const
{
    BigFloat out(x.precision(), 0L);
    for (unsigned k = order + 1; k-- > 0;) {
        out = out * x + w[k];
    }
    return out;
}

BigFloat ManifoldJet::derivative(const BigFloat& x) const
{
    BigFloat out(x.precision(), 0L);
    for (unsigned k = order + 1; k-- > 1;) {
        out = out * x + w[k] * static_cast<long>(k);
    }
    return out;
}

namespace {

Series identity_series(unsigned order, Precision p)
{
    Series x(order + 1, BigFloat(p, 0L));
    if (order >= 1) {
        x[1] = BigFloat(p, 1L);
    }
    return x;
}

Series residual_series(const ConjugatedJet& F, const std::vector<BigFloat>& w, unsigned order)
{
    const Precision p = F.lambda.precision();
    const Series x = identity_series(order, p);
    const Series y(w.begin(), w.begin() + order + 1);
    const Series f1 = compose(F.f, x, y);
    const Series f2 = compose(F.g, x, y);
    // w(f1) by Horner
    Series wf(order + 1, BigFloat(p, 0L));
    for (unsigned k = order + 1; k-- > 0;) {
        wf = series_mul(wf, f1);
        wf[0] += w[k];
    }
    Series out(order + 1, BigFloat(p, 0L));
    for (unsigned k = 0; k <= order; ++k) {
        out[k] = f2[k] - wf[k];
    }
    return out;
}

} // namespace

ManifoldJet unstable_jet(const ConjugatedJet& F, unsigned order)
{
    if (order < 2 || order > F.order()) {
        throw Error(Errc::DegreeTooLow, "manifold order must lie in [2, jet order]");
    }
    const Precision p = F.lambda.precision();
    const BigFloat eps = negligible(p);
    ManifoldJet out;
    out.order = order;
    out.w.assign(order + 1, BigFloat(p, 0L));
    BigFloat lk = F.lambda;
    for (unsigned k = 2; k <= order; ++k) {
        lk *= F.lambda;
        const BigFloat den = lk - F.mu;
        if (abs(den) < eps * max(abs(lk), abs(F.mu))) {
            throw Error(Errc::ResonantDenominator, "lambda^" + std::to_string(k) + " - mu vanishes");
        }
        // With w_k = 0 the x^k coefficient is e_k; adding w_k shifts it by (mu - lambda^k) w_k.
        const Series e = residual_series(F, out.w, k);
        out.w[k] = e[k] / den;
    }
    out.max_residual = BigFloat(p, 0L);
    for (const auto& c : invariance_residual(F, out)) {
        out.max_residual = max(out.max_residual, abs(c));
    }
    return out;
}

Series invariance_residual(const ConjugatedJet& F, const ManifoldJet& w)
{
    return residual_series(F, w.w, w.order);
}

std::array<BigFloat, 3> closed_form_w2_w4(const ConjugatedJet& F)
{
    const BigFloat& l = F.lambda;
    const BigFloat& mu = F.mu;
    const BigFloat& f20 = F.f.at(2, 0);
    const BigFloat& f11 = F.f.at(1, 1);
    const BigFloat& f30 = F.f.at(3, 0);
    const BigFloat& g20 = F.g.at(2, 0);
    const BigFloat& g11 = F.g.at(1, 1);
    const BigFloat& g02 = F.g.at(0, 2);
    const BigFloat& g30 = F.g.at(3, 0);
    const BigFloat& g21 = F.g.at(2, 1);
    const BigFloat& g40 = F.g.at(4, 0);
    const BigFloat l2 = l * l;
    const BigFloat l3 = l2 * l;
    const BigFloat l4 = l3 * l;
    const BigFloat mu2 = mu * mu;
    const BigFloat mu3 = mu2 * mu;
    const BigFloat f20sq = f20 * f20;
    const BigFloat g20sq = g20 * g20;

    const BigFloat w2 = g20 / (l2 - mu);
    const BigFloat w3 = (l2 * g30 - 2 * l * f20 * g20 - mu * g30 + g11 * g20) / ((l2 - mu) * (l3 - mu));

    BigFloat W4 = g40 * pow(l, 7);
    W4 += (-3 * f20 * g30 - 2 * f30 * g20) * pow(l, 6);
    W4 += (5 * f20sq * g20 - 2 * g40 * mu + g20 * g21) * pow(l, 5);
    W4 += ((6 * f20 * g30 + 2 * f30 * g20 - g40) * mu - 2 * f11 * g20sq - 3 * f20 * g11 * g20 + g11 * g30) * l4;
    W4 += (g40 * mu2 + (-5 * f20sq * g20 + 2 * f30 * g20 - g20 * g21) * mu - 2 * f20 * g11 * g20 + g02 * g20sq) * l3;
    W4 += ((-3 * f20 * g30 + 2 * g40) * mu2 +
           (f20sq * g20 + 3 * f20 * g11 * g20 - 2 * g11 * g30 - g20 * g21) * mu + g11 * g11 * g20) *
          l2;
    W4 += (-2 * f30 * g20 * mu2 + (2 * f11 * g20sq + 2 * f20 * g11 * g20) * mu) * l;
    W4 += -g40 * mu3 + (-f20sq * g20 + g11 * g30 + g20 * g21) * mu2 + (-g02 * g20sq - g11 * g11 * g20) * mu;
    const BigFloat w4 = W4 / ((l2 - mu) * (l2 - mu) * (l3 - mu) * (l4 - mu));
    return {w2, w3, w4};
}

UnstableManifold landen_unstable_manifold(Precision prec, unsigned order, EigenNormalization norm)
{
    PlanarPoint center{BigFloat(prec, 0L), BigFloat(prec, 0L)};
    bool found = false;
    for (const auto& fp : fixed_points(prec)) {
        if (fp.name == "P2") {
            center = {fp.a, fp.b};
            found = true;
        }
    }
    if (!found) {
        throw Error(Errc::StageFailed, "saddle fixed point not found");
    }
    const Eigen2 e = eigen2(jacobian_G(center), norm);
    ConjugatedJet F = conjugated_jet(center, e, order);
    ManifoldJet jet = unstable_jet(F, order);
    return {center, e, std::move(F), std::move(jet)};
}

PlanarPoint param_Wu(const BigFloat& r, const ManifoldJet& jet, const Eigen2& e, const PlanarPoint& center)
{
    const BigFloat s = jet.eval(r);
    return {center.a + e.L.m11 * r + e.L.m12 * s, center.b + e.L.m21 * r + e.L.m22 * s};
}

BigFloat eval_D1(const PlanarPoint& p, const ManifoldJet& jet, const Eigen2& e, const PlanarPoint& center)
{
    const BigFloat du = p.a - center.a;
    const BigFloat dv = p.b - center.b;
    const BigFloat x = e.L_inv.m11 * du + e.L_inv.m12 * dv;
    const BigFloat y = e.L_inv.m21 * du + e.L_inv.m22 * dv;
    return jet.eval(x) - y;
}

BigFloat eval_D2(const PlanarPoint& p)
{
    const BigFloat num = p.a * p.b + 5 * p.a + 5 * p.b + 9;
    const BigFloat s = p.a + p.b;
    return pow(num, 3) - pow(s + 6, 3) * pow(s + 2, 2);
}

BigFloat eval_D3(const PlanarPoint& p) { return eval_D2(g_map(p)); }

BigFloat eval_D4(const PlanarPoint& p)
{
    const BigFloat s = p.a + p.b + 2;
    const BigFloat c = real_cbrt(s);
    const BigFloat c2 = c * c;
    return p.a * p.b + 5 * p.a + 5 * p.b + 9 + (s + 4) * c2 + 2 * c2 * c2;
}

BigFloat manifold_parameter(const PlanarPoint& p, const UnstableManifold& m)
{
    const Precision prec = p.a.precision();
    const BigFloat du = p.a - m.center.a;
    const BigFloat dv = p.b - m.center.b;
    BigFloat r = m.eigen.L_inv.m11 * du + m.eigen.L_inv.m12 * dv;
    const BigFloat tol = negligible(prec);
    for (int it = 0; it < 50; ++it) {
        const BigFloat f = param_Wu(r, m).a - p.a;
        const BigFloat df = m.eigen.L.m11 + m.eigen.L.m12 * m.jet.derivative(r);
        const BigFloat step = f / df;
        r -= step;
        if (abs(step) <= tol * max(BigFloat(prec, 1L), abs(r))) {
            return r;
        }
    }
    throw Error(Errc::NoConvergence, "manifold parameter did not converge");
}

} // namespace pcert
