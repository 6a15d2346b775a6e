#include "pcert/landen/periodic.hpp"

#include "pcert/error.hpp"
#include "pcert/mpoly/eliminate.hpp"

#include <algorithm>
#include <limits>

namespace pcert {

namespace {

MPoly strip_monomial_content(const MPoly& p)
{
    if (p.is_zero()) {
        return p;
    }
    Monomial low(p.nvars(), std::numeric_limits<unsigned>::max());
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t k = 0; k < e.size(); ++k) {
            low[k] = std::min(low[k], e[k]);
        }
    }
    MPoly out(p.variables());
    for (const auto& [e, c] : p.terms()) {
        Monomial f = e;
        for (std::size_t k = 0; k < f.size(); ++k) {
            f[k] -= low[k];
        }
        out.add_term(f, c);
    }
    return out;
}

struct PointNumerators {
    MPoly a; // over r^2
    MPoly b; // over r^2
    MPoly r;
};

PointNumerators point_numerators(const MPoly& m, const MPoly& r)
{
    const auto& v = m.variables();
    const MPoly one = MPoly::constant(v, 1);
    const MPoly r2 = r * r;
    const MPoly r3 = r2 * r;
    return {pow(m, 3) * r2 - r3 - 2 * r2 - 4 * one, r3 + 4 * one, r};
}

// Numerator of -x t^4 + u v + 5u + 5v + 9, where (u, v) is an orbit point
// and x the first coordinate of its image, both from point_numerators.
MPoly image_equation(const PointNumerators& uv, const PointNumerators& next, const MPoly& t)
{
    const MPoly d2 = uv.r * uv.r;
    const MPoly d4 = d2 * d2;
    const MPoly e2 = next.r * next.r;
    MPoly num = -(next.a * pow(t, 4) * d4);
    num += uv.a * uv.b * e2;
    num += Rational(5) * (uv.a + uv.b) * d2 * e2;
    num += Rational(9) * d4 * e2;
    return strip_monomial_content(num);
}

} // namespace

UPoly fixed_point_poly()
{
    const std::vector<std::string> v{"m"};
    const MPoly m = MPoly::variable(v, "m");
    const PointNumerators p = point_numerators(m, m);
    return collapse(image_equation(p, p, m));
}

UPoly fixed_point_poly_factored()
{
    const UPoly x({0, 1});
    const UPoly one = UPoly::constant(1);
    return -(x - 2 * one) * (x * x - x + one) * (x * x + x + 2 * one) * (pow(x, 3) + x * x - x - 2 * one) *
           (pow(x, 3) + x * x + x + 2 * one);
}

std::vector<MPoly> period2_system()
{
    const std::vector<std::string> v{"m", "n"};
    const MPoly m = MPoly::variable(v, "m");
    const MPoly n = MPoly::variable(v, "n");
    const PointNumerators ab = point_numerators(m, n);
    const PointNumerators cd = point_numerators(n, m);
    return {image_equation(ab, cd, m), image_equation(cd, ab, n)};
}

std::vector<MPoly> period3_system()
{
    const std::vector<std::string> v{"m", "n", "r"};
    const MPoly m = MPoly::variable(v, "m");
    const MPoly n = MPoly::variable(v, "n");
    const MPoly r = MPoly::variable(v, "r");
    const PointNumerators ab = point_numerators(m, r);
    const PointNumerators cd = point_numerators(n, m);
    const PointNumerators ef = point_numerators(r, n);
    return {image_equation(ab, cd, m), image_equation(cd, ef, n), image_equation(ef, ab, r)};
}

} // namespace pcert
