#pragma once

#include "pcert/arith/rational.hpp"

#include <optional>
#include <vector>

namespace pcert {

class UPoly;

// Integer-coefficient univariate polynomial, ascending degree, trimmed.
// The workhorse representation behind root isolation, gcds and resultants.
using ZPoly = std::vector<Integer>;

namespace zpoly {

void trim(ZPoly& p);
inline int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

Integer content(const ZPoly& p);
// Divides out the content; the sign of the leading coefficient is kept.
ZPoly primitive(ZPoly p);
ZPoly derivative(const ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);

// s*p with s > 0 chosen so the result has integer, content-1 coefficients.
// The scale s is written to *scale when given.
ZPoly from_upoly(const UPoly& p, Rational* scale = nullptr);
UPoly to_upoly(const ZPoly& p);

// Sign of p at a rational point, evaluated exactly.
int sign_at(const ZPoly& p, const Rational& x);
Rational eval(const ZPoly& p, const Rational& x);

// p(x + 1), in place, O(d^2) additions.
void taylor_shift_one(ZPoly& p);
// p(x + c)
ZPoly taylor_shift(ZPoly p, const Integer& c);
// p(w * x)
ZPoly scale_variable(ZPoly p, const Integer& w);
// x^d p(1/x)
ZPoly reversed(const ZPoly& p);
// Sign changes in the coefficient sequence, zeros skipped.
int sign_variations(const ZPoly& p);

// q with a = q*b exactly over Z, or nullopt. Aborts early on the first
// non-divisible coefficient.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
// lc(b)^(deg a - deg b + 1) * a mod b
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);

// Integer resultant. Bareiss on the Sylvester matrix when both degrees are
// at most `sylvester_cutoff`, subresultant PRS otherwise.
Integer resultant(const ZPoly& a, const ZPoly& b, int sylvester_cutoff = 12);
Integer resultant_sylvester(const ZPoly& a, const ZPoly& b);
Integer resultant_prs(const ZPoly& a, const ZPoly& b);

// Monic-over-Q gcd as a primitive integer polynomial with positive leading
// coefficient. Multi-modular; each candidate is verified by exact division.
ZPoly gcd(const ZPoly& a, const ZPoly& b);

} // namespace zpoly
} // namespace pcert
