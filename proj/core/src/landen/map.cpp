#include "pcert/landen/map.hpp"

#include "pcert/error.hpp"

namespace pcert {

BigFloat forbidden_guard(Precision p) { return pow10(p, -static_cast<long>(p.digits) + 5); }

namespace {

Precision common(const BigFloat& x, const BigFloat& y)
{
    return x.precision().digits >= y.precision().digits ? x.precision() : y.precision();
}

BigFloat checked_sum(const BigFloat& a, const BigFloat& b)
{
    BigFloat s = a + b + 2;
    if (abs(s) < forbidden_guard(common(a, b))) {
        throw Error(Errc::OnForbiddenLine, "a + b + 2 = " + s.to_string(6) + " at a = " + a.to_string(20));
    }
    return s;
}

} // namespace

PlanarPoint g_map(const PlanarPoint& p)
{
    const BigFloat s = checked_sum(p.a, p.b);
    const BigFloat c = real_cbrt(s);
    const BigFloat c2 = c * c;
    const BigFloat num = p.a * p.b + 5 * p.a + 5 * p.b + 9;
    return {num / (c2 * c2), (s + 4) / c2};
}

PlanarPoint g_map(const RationalPoint& p, Precision prec)
{
    if (p.a + p.b + 2 == 0) {
        throw Error(Errc::OnForbiddenLine, "a + b + 2 = 0 at a = " + to_string(p.a));
    }
    return g_map(PlanarPoint{BigFloat(prec, p.a), BigFloat(prec, p.b)});
}

LandenState5 landen5_step(const LandenState5& st)
{
    const BigFloat s = checked_sum(st.a, st.b);
    const BigFloat r = real_cbrt(s);
    const BigFloat r2 = r * r;
    const PlanarPoint ab = g_map(PlanarPoint{st.a, st.b});
    return {ab.a,
            ab.b,
            (st.d + st.e + st.c) / r2,
            ((st.b + 3) * st.c + (st.a + 3) * st.e + 2 * st.d) / s,
            (st.c + st.e) / r};
}

Mat2 jacobian_G(const PlanarPoint& p)
{
    const BigFloat s = checked_sum(p.a, p.b);
    const BigFloat c = real_cbrt(s);
    const BigFloat c2 = c * c;
    const BigFloat c4 = c2 * c2;
    const BigFloat num = p.a * p.b + 5 * p.a + 5 * p.b + 9;
    const BigFloat t1 = 4 * num / (3 * s * c4);
    const BigFloat t2 = 1 / c2 - 2 * (s + 4) / (3 * s * c2);
    return {(p.b + 5) / c4 - t1, (p.a + 5) / c4 - t1, t2, t2};
}

Rational resolvent(const Rational& a, const Rational& b)
{
    return -a * a * b * b + 4 * a * a * a + 4 * b * b * b - 18 * a * b + 27;
}

BigFloat resolvent(const BigFloat& a, const BigFloat& b)
{
    return -(a * a * b * b) + 4 * a * a * a + 4 * b * b * b - 18 * a * b + 27;
}

bool integral_converges(const BigFloat& a, const BigFloat& b)
{
    if (a >= 0 && b >= 0) {
        return true;
    }
    return resolvent(a, b) > 0;
}

namespace {

struct Integrand {
    const LandenState5& s;

    // tanh-sinh in t on [0, 1) with x = t / (1 - t), which is x = exp(pi sinh u).
    BigFloat operator()(const BigFloat& u, const BigFloat& halfpi) const
    {
        const BigFloat x = exp(2 * halfpi * sinh(u));
        const BigFloat y = x * x;
        const BigFloat num = (s.c * y + s.d) * y + s.e;
        const BigFloat den = ((y + s.a) * y + s.b) * y + 1;
        return num / den * x * 2 * halfpi * cosh(u);
    }
};

} // namespace

BigFloat integral_I(const LandenState5& s, const BigFloat& tol)
{
    if (!integral_converges(s.a, s.b)) {
        throw Error(Errc::DivergentIntegral, "x^3 + a x^2 + b x + 1 has a positive root at a = " + s.a.to_string(12) +
                                                 ", b = " + s.b.to_string(12));
    }
    const Precision prec = s.a.precision();
    const BigFloat halfpi = pi(prec) / 2;
    const Integrand f{s};
    const BigFloat tiny = tol * pow10(prec, -6);

    // h * sum over u = k h, walking out until the terms are negligible.
    auto sum_from = [&](const BigFloat& h, long start, long step) {
        BigFloat acc(prec);
        for (int side : {1, -1}) {
            int small = 0;
            for (long k = start; small < 3 && k < 100000; k += step) {
                if (side < 0 && k == 0) {
                    continue;
                }
                const BigFloat term = f(h * (side * k), halfpi);
                acc += term;
                small = abs(term) < tiny ? small + 1 : 0;
            }
        }
        return acc;
    };

    BigFloat h(prec, 1L);
    BigFloat total = sum_from(h, 0, 1);
    BigFloat estimate = h * total;
    for (int level = 1; level <= 16; ++level) {
        h = h / 2;
        total += sum_from(h, 1, 2);
        const BigFloat next = h * total;
        const BigFloat diff = abs(next - estimate);
        estimate = next;
        if (level >= 3 && diff < tol / 10) {
            return estimate;
        }
    }
    throw Error(Errc::NoConvergence, "quadrature did not settle after 16 levels");
}

} // namespace pcert
