#include "pcert/upoly/resultant.hpp"

#include "pcert/error.hpp"
#include "pcert/upoly/zpoly.hpp"

namespace pcert {

Rational resultant(const UPoly& p, const UPoly& q)
{
    if (p.is_zero() || q.is_zero()) {
        return 0;
    }
    // Res(s p, t q) = s^deg q * t^deg p * Res(p, q)
    Rational sp;
    Rational sq;
    const ZPoly zp = zpoly::from_upoly(p, &sp);
    const ZPoly zq = zpoly::from_upoly(q, &sq);
    Rational r(zpoly::resultant(zp, zq));
    r /= pow(sp, static_cast<unsigned>(q.degree()));
    r /= pow(sq, static_cast<unsigned>(p.degree()));
    return r;
}

Rational discriminant(const UPoly& p)
{
    const int n = p.degree();
    if (n < 2) {
        throw Error(Errc::DegreeTooLow, "discriminant needs degree >= 2, got " + std::to_string(n));
    }
    Rational d = resultant(p, p.derivative()) / p.lc();
    if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) {
        d = -d;
    }
    return d;
}

} // namespace pcert
