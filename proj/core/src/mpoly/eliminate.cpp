#include "pcert/mpoly/eliminate.hpp"

#include "pcert/error.hpp"
#include "pcert/upoly/modular.hpp"
#include "pcert/upoly/zpoly.hpp"

#include <algorithm>

namespace pcert {

std::vector<MPoly> to_univariate(const MPoly& p, std::size_t var)
{
    if (var >= p.nvars()) {
        throw Error(Errc::UnknownVariable, "variable index out of range");
    }
    std::vector<std::string> rest = p.variables();
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(var));
    const int d = std::max(p.degree_in(var), 0);
    std::vector<MPoly> coeffs(static_cast<std::size_t>(d + 1), MPoly(rest));
    for (const auto& [e, c] : p.terms()) {
        Monomial r = e;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(var));
        coeffs[e[var]].add_term(r, c);
    }
    if (p.is_zero()) {
        coeffs.clear();
    }
    return coeffs;
}

MPoly from_univariate(const std::vector<MPoly>& coeffs, std::string_view var, std::size_t position)
{
    if (coeffs.empty()) {
        throw Error(Errc::ZeroPolynomial, "empty coefficient list carries no variable list");
    }
    std::vector<std::string> vars = coeffs.front().variables();
    vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(position), std::string(var));
    MPoly out(vars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms()) {
            Monomial full = e;
            full.insert(full.begin() + static_cast<std::ptrdiff_t>(position), static_cast<unsigned>(k));
            out.add_term(full, c);
        }
    }
    return out;
}

UPoly collapse(const MPoly& p)
{
    const auto used = p.used_variables();
    if (used.size() > 1) {
        throw Error(Errc::NotUnivariate, "polynomial depends on " + std::to_string(used.size()) + " variables");
    }
    if (p.is_zero()) {
        return {};
    }
    const std::size_t v = used.empty() ? 0 : used.front();
    std::vector<Rational> cs(static_cast<std::size_t>(std::max(p.degree_in(v), 0) + 1), Rational(0));
    for (const auto& [e, c] : p.terms()) {
        cs[used.empty() ? 0 : e[v]] += c;
    }
    return UPoly(std::move(cs));
}

MPoly embed(const UPoly& p, std::vector<std::string> variables, std::size_t var)
{
    MPoly out(std::move(variables));
    if (var >= out.nvars()) {
        throw Error(Errc::UnknownVariable, "variable index out of range");
    }
    const auto cs = p.coeffs();
    for (std::size_t k = 0; k < cs.size(); ++k) {
        Monomial e(out.nvars(), 0);
        e[var] = static_cast<unsigned>(k);
        out.add_term(e, cs[k]);
    }
    return out;
}

namespace {

using Dense = std::vector<MPoly>; // coefficients in the eliminated variable, ascending

int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }

void trim(Dense& p)
{
    while (!p.empty() && p.back().is_zero()) {
        p.pop_back();
    }
}

Dense pseudo_remainder(const Dense& a, const Dense& b)
{
    const int db = deg(b);
    Dense r = a;
    trim(r);
    if (deg(r) < db) {
        return r;
    }
    int e = deg(r) - db + 1;
    const MPoly& lcb = b.back();
    while (!r.empty() && deg(r) >= db) {
        const int shift = deg(r) - db;
        const MPoly lr = r.back();
        for (auto& c : r) {
            c *= lcb;
        }
        for (int i = 0; i <= db; ++i) {
            r[static_cast<std::size_t>(i + shift)] -= lr * b[static_cast<std::size_t>(i)];
        }
        trim(r);
        --e;
    }
    if (e > 0 && !r.empty()) {
        const MPoly f = pow(lcb, static_cast<unsigned>(e));
        for (auto& c : r) {
            c *= f;
        }
    }
    return r;
}

MPoly pow_or_one(const MPoly& base, int e, const std::vector<std::string>& vars)
{
    return e == 0 ? MPoly::constant(vars, 1) : pow(base, static_cast<unsigned>(e));
}

} // namespace

MPoly elim_resultant(const MPoly& p, const MPoly& q, std::string_view var)
{
    if (p.variables() != q.variables()) {
        throw Error(Errc::ArityMismatch, "resultant of polynomials over different variable lists");
    }
    const std::size_t v = p.index_of(var);
    if (p.degree_in(v) <= 0 || q.degree_in(v) <= 0) {
        throw Error(Errc::DegreeZeroInVariable, "both polynomials need positive degree in '" + std::string(var) + "'");
    }
    Dense a = to_univariate(p, v);
    Dense b = to_univariate(q, v);
    const std::vector<std::string> rest = a.front().variables();

    // Subresultant PRS over the coefficient ring Q[rest].
    int s = 1;
    if (deg(a) < deg(b)) {
        if ((deg(a) & 1) && (deg(b) & 1)) {
            s = -1;
        }
        std::swap(a, b);
    }
    MPoly g = MPoly::constant(rest, 1);
    MPoly h = MPoly::constant(rest, 1);
    for (;;) {
        const int da = deg(a);
        const int db = deg(b);
        const int delta = da - db;
        if ((da & 1) && (db & 1)) {
            s = -s;
        }
        Dense r = pseudo_remainder(a, b);
        if (r.empty()) {
            return MPoly(rest);
        }
        a = std::move(b);
        const MPoly divisor = g * pow_or_one(h, delta, rest);
        for (auto& c : r) {
            c = divide_exact(c, divisor);
        }
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            h = divide_exact(pow(g, static_cast<unsigned>(delta)), pow_or_one(h, delta - 1, rest));
        }
        if (deg(b) == 0) {
            break;
        }
    }
    const int da = deg(a);
    MPoly res = divide_exact(pow(b.back(), static_cast<unsigned>(da)), pow_or_one(h, da - 1, rest));
    return s < 0 ? -res : res;
}

namespace {

struct IntegerBivariate {
    // rows[i][j]: coefficient of x^i y^j, x eliminated.
    std::vector<std::vector<Integer>> rows;
    Rational scale; // integer form = scale * original
    int deg_y = 0;
};

IntegerBivariate integer_form(const MPoly& p, std::size_t x, std::size_t y)
{
    IntegerBivariate out;
    Integer den_lcm = 1;
    for (const auto& [e, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    out.scale = den_lcm;
    const int dx = p.degree_in(x);
    out.deg_y = y < p.nvars() ? std::max(p.degree_in(y), 0) : 0;
    out.rows.assign(static_cast<std::size_t>(dx + 1), std::vector<Integer>(static_cast<std::size_t>(out.deg_y + 1), 0));
    for (const auto& [e, c] : p.terms()) {
        const Rational scaled = c * out.scale;
        const unsigned j = y < p.nvars() ? e[y] : 0;
        out.rows[e[x]][j] = scaled.get_num();
    }
    return out;
}

// (sum_i ||row_i||_1^2)^k, the square of a Hadamard-type row-norm product factor.
Integer norm_power(const IntegerBivariate& p, int k)
{
    Integer s = 0;
    for (const auto& row : p.rows) {
        Integer l1 = 0;
        for (const auto& c : row) {
            l1 += abs(c);
        }
        s += l1 * l1;
    }
    return pow(s, static_cast<unsigned>(k));
}

modp::u64 eval_row(const std::vector<modp::u64>& row, modp::u64 x, const modp::Field& f)
{
    modp::u64 acc = 0;
    for (std::size_t i = row.size(); i-- > 0;) {
        acc = f.add(f.mul(acc, x), row[i]);
    }
    return acc;
}

// Sylvester resultant with formal degrees size()-1, even when leading
// coefficients vanish after evaluation.
modp::u64 formal_resultant(const modp::PolyP& a, const modp::PolyP& b, const modp::Field& f)
{
    const int m = static_cast<int>(a.size()) - 1;
    const int n = static_cast<int>(b.size()) - 1;
    modp::PolyP ta = a;
    modp::PolyP tb = b;
    modp::trim(ta);
    modp::trim(tb);
    const int ma = modp::degree(ta);
    const int nb = modp::degree(tb);
    if (ma < m && nb < n) {
        return 0;
    }
    if (ma < 0 || nb < 0) {
        return 0;
    }
    modp::u64 r = modp::resultant(std::move(ta), std::move(tb), f);
    if (ma < m) {
        // Res_{m,n} = (-1)^{n(m-ma)} lc(b)^{m-ma} Res_{ma,n}
        r = f.mul(r, f.pow(b.back(), static_cast<modp::u64>(m - ma)));
        if ((n & 1) && ((m - ma) & 1)) {
            r = f.neg(r);
        }
    } else if (nb < n) {
        r = f.mul(r, f.pow(a.back(), static_cast<modp::u64>(n - nb)));
    }
    return r;
}

} // namespace

UPoly elim_resultant_modular(const MPoly& p, const MPoly& q, std::string_view var)
{
    if (p.variables() != q.variables()) {
        throw Error(Errc::ArityMismatch, "resultant of polynomials over different variable lists");
    }
    const std::size_t x = p.index_of(var);
    if (p.degree_in(x) <= 0 || q.degree_in(x) <= 0) {
        throw Error(Errc::DegreeZeroInVariable, "both polynomials need positive degree in '" + std::string(var) + "'");
    }
    std::size_t y = p.nvars();
    for (std::size_t i = 0; i < p.nvars(); ++i) {
        if (i == x) {
            continue;
        }
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) {
            if (y != p.nvars()) {
                throw Error(Errc::NotUnivariate, "modular elimination needs bivariate input");
            }
            y = i;
        }
    }
    const IntegerBivariate a = integer_form(p, x, y);
    const IntegerBivariate b = integer_form(q, x, y);
    const int dpx = static_cast<int>(a.rows.size()) - 1;
    const int dqx = static_cast<int>(b.rows.size()) - 1;
    const int bound_deg = dqx * a.deg_y + dpx * b.deg_y;

    // Coefficient bound: |c| <= B with B^2 = norm_power(a, dqx) * norm_power(b, dpx).
    const Integer bound_sq = norm_power(a, dqx) * norm_power(b, dpx);
    const std::size_t npoints = static_cast<std::size_t>(bound_deg + 1);

    modp::PrimeStream primes;
    modp::Crt crt(npoints);
    std::vector<modp::u64> values(npoints);
    while (crt.primes_used() == 0 || crt.modulus() * crt.modulus() <= 4 * bound_sq) {
        const modp::u64 prime = primes.next();
        const modp::Field f{prime};
        auto reduce_rows = [&](const IntegerBivariate& m) {
            std::vector<std::vector<modp::u64>> r(m.rows.size());
            for (std::size_t i = 0; i < m.rows.size(); ++i) {
                r[i].resize(m.rows[i].size());
                for (std::size_t j = 0; j < m.rows[i].size(); ++j) {
                    r[i][j] = f.reduce(m.rows[i][j]);
                }
            }
            return r;
        };
        const auto ap = reduce_rows(a);
        const auto bp = reduce_rows(b);
        modp::PolyP ua(ap.size());
        modp::PolyP ub(bp.size());
        for (std::size_t pt = 0; pt < npoints; ++pt) {
            for (std::size_t i = 0; i < ap.size(); ++i) {
                ua[i] = eval_row(ap[i], pt, f);
            }
            for (std::size_t i = 0; i < bp.size(); ++i) {
                ub[i] = eval_row(bp[i], pt, f);
            }
            values[pt] = formal_resultant(ua, ub, f);
        }
        modp::PolyP interp = modp::interpolate_consecutive(values, f);
        interp.resize(npoints, 0);
        crt.add(prime, interp);
    }
    const std::vector<Integer> coeffs = crt.symmetric();
    std::vector<Rational> cs(coeffs.begin(), coeffs.end());
    UPoly res(std::move(cs));
    // Res(sa p, sb q) = sa^deg q * sb^deg p * Res(p, q)
    const Rational factor = pow(a.scale, static_cast<unsigned>(dqx)) * pow(b.scale, static_cast<unsigned>(dpx));
    res *= 1 / factor;
    return res;
}

UPoly elim_discriminant(const MPoly& p, std::string_view var)
{
    const std::size_t x = p.index_of(var);
    const int k = p.degree_in(x);
    if (k < 2) {
        throw Error(Errc::DegreeTooLow, "discriminant needs degree >= 2 in '" + std::string(var) + "'");
    }
    const UPoly res = elim_resultant_modular(p, partial(p, x), var);
    const UPoly lc = collapse(to_univariate(p, x).back());
    UPoly d = divide_exact(res, lc);
    if ((static_cast<long>(k) * (k - 1) / 2) % 2 != 0) {
        d = -d;
    }
    return d;
}

} // namespace pcert
