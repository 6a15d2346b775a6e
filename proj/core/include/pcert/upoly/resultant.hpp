#pragma once

#include "pcert/upoly/upoly.hpp"

namespace pcert {

// Res(p, q), equal to the Sylvester determinant.
// Fraction-free Sylvester up to degree 12, subresultant PRS above.
Rational resultant(const UPoly& p, const UPoly& q);

// (-1)^(n(n-1)/2) Res(p, p') / lc(p) for deg p = n >= 2.
Rational discriminant(const UPoly& p);

} // namespace pcert
