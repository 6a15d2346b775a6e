#pragma once

#include "pcert/mpoly/mpoly.hpp"
#include "pcert/upoly/upoly.hpp"

#include <string_view>
#include <vector>

namespace pcert {

// Coefficients of p as a polynomial in `var`, ascending; each coefficient is
// an MPoly over the remaining variables.
std::vector<MPoly> to_univariate(const MPoly& p, std::size_t var);
MPoly from_univariate(const std::vector<MPoly>& coeffs, std::string_view var, std::size_t position);

// p must use at most one variable. Throws Error(NotUnivariate) otherwise.
UPoly collapse(const MPoly& p);
MPoly embed(const UPoly& p, std::vector<std::string> variables, std::size_t var);

// Res(p, q; var) over the remaining variables, by subresultant PRS over the
// multivariate coefficient ring. Throws Error(DegreeZeroInVariable).
MPoly elim_resultant(const MPoly& p, const MPoly& q, std::string_view var);

// Same resultant for bivariate p, q, returned as a univariate polynomial in
// the other variable. Evaluation/interpolation modulo word-size primes with
// Chinese remaindering up to a Hadamard bound; exact.
UPoly elim_resultant_modular(const MPoly& p, const MPoly& q, std::string_view var);

// (-1)^(k(k-1)/2) Res(p, dp/dvar; var) / lc_var(p), k = deg_var(p), for
// bivariate p; univariate in the other variable.
UPoly elim_discriminant(const MPoly& p, std::string_view var);

} // namespace pcert
