#pragma once

#include "pcert/arith/bigfloat.hpp"
#include "pcert/arith/rational.hpp"

#include <string>

namespace pcert {

template <class T>
struct PlanarPointT {
    T a;
    T b;
};

using PlanarPoint = PlanarPointT<BigFloat>;
using RationalPoint = PlanarPointT<Rational>;

struct LandenState5 {
    BigFloat a, b, c, d, e;
};

struct Mat2 {
    BigFloat m11, m12, m21, m22;

    BigFloat trace() const { return m11 + m22; }
    BigFloat det() const { return m11 * m22 - m12 * m21; }
};

// Points with |a + b + 2| below this are treated as lying on the line a + b + 2 = 0.
BigFloat forbidden_guard(Precision p);

// G(a, b) = ((ab + 5a + 5b + 9) / s^(4/3), (s + 4) / s^(2/3)), s = a + b + 2,
// with real cube roots. Throws Error(OnForbiddenLine).
PlanarPoint g_map(const PlanarPoint& p);
// Exact test of the forbidden line, evaluated at precision `prec`.
PlanarPoint g_map(const RationalPoint& p, Precision prec);

LandenState5 landen5_step(const LandenState5& s);

// DG(a, b). Throws Error(OnForbiddenLine).
Mat2 jacobian_G(const PlanarPoint& p);

// -a^2 b^2 + 4a^3 + 4b^3 - 18ab + 27
Rational resolvent(const Rational& a, const Rational& b);
BigFloat resolvent(const BigFloat& a, const BigFloat& b);
inline BigFloat resolvent(const PlanarPoint& p) { return resolvent(p.a, p.b); }

// x^3 + a x^2 + b x + 1 has no root in [0, inf): both coefficients
// nonnegative, or a single real root (resolvent > 0), which is then negative.
bool integral_converges(const BigFloat& a, const BigFloat& b);

// Integral over [0, inf) of (c x^4 + d x^2 + e) / (x^6 + a x^4 + b x^2 + 1).
// Throws Error(DivergentIntegral) and Error(NoConvergence).
BigFloat integral_I(const LandenState5& s, const BigFloat& tol);

} // namespace pcert
