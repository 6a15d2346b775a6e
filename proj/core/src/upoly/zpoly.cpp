#include "pcert/upoly/zpoly.hpp"

#include "pcert/error.hpp"
#include "pcert/upoly/modular.hpp"
#include "pcert/upoly/upoly.hpp"

#include <algorithm>
#include <utility>

namespace pcert::zpoly {

void trim(ZPoly& p)
{
    while (!p.empty() && sgn(p.back()) == 0) {
        p.pop_back();
    }
}

Integer content(const ZPoly& p)
{
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

ZPoly primitive(ZPoly p)
{
    trim(p);
    const Integer g = content(p);
    if (g > 1) {
        for (auto& c : p) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
    return p;
}

ZPoly derivative(const ZPoly& p)
{
    if (p.size() <= 1) {
        return {};
    }
    ZPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) {
        d[i - 1] = p[i] * static_cast<unsigned long>(i);
    }
    return d;
}

ZPoly mul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    trim(r);
    return r;
}

ZPoly from_upoly(const UPoly& p, Rational* scale)
{
    const auto cs = p.coeffs();
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& c : cs) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    if (num_gcd == 0) {
        num_gcd = 1;
    }
    ZPoly z(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Integer t = den_lcm / cs[i].get_den();
        t *= cs[i].get_num();
        mpz_divexact(z[i].get_mpz_t(), t.get_mpz_t(), num_gcd.get_mpz_t());
    }
    if (scale) {
        *scale = make_rational(den_lcm, num_gcd);
    }
    return z;
}

UPoly to_upoly(const ZPoly& p)
{
    std::vector<Rational> cs(p.begin(), p.end());
    return UPoly(std::move(cs));
}

int sign_at(const ZPoly& p, const Rational& x)
{
    if (p.empty()) {
        return 0;
    }
    // Homogenized Horner: den^deg * p(num/den), den > 0.
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = p.back();
    if (den == 1) {
        for (std::size_t i = p.size() - 1; i-- > 0;) {
            acc *= num;
            acc += p[i];
        }
        return sgn(acc);
    }
    Integer dpow = den;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        acc *= num;
        mpz_addmul(acc.get_mpz_t(), p[i].get_mpz_t(), dpow.get_mpz_t());
        dpow *= den;
    }
    return sgn(acc);
}

Rational eval(const ZPoly& p, const Rational& x)
{
    Rational acc = 0;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

void taylor_shift_one(ZPoly& p)
{
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            mpz_add(p[j].get_mpz_t(), p[j].get_mpz_t(), p[j + 1].get_mpz_t());
        }
    }
}

ZPoly taylor_shift(ZPoly p, const Integer& c)
{
    if (c == 0) {
        return p;
    }
    if (c == 1) {
        taylor_shift_one(p);
        return p;
    }
    const std::size_t n = p.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j-- > i;) {
            mpz_addmul(p[j].get_mpz_t(), p[j + 1].get_mpz_t(), c.get_mpz_t());
        }
    }
    return p;
}

ZPoly scale_variable(ZPoly p, const Integer& w)
{
    Integer wk = 1;
    for (std::size_t i = 1; i < p.size(); ++i) {
        wk *= w;
        p[i] *= wk;
    }
    trim(p);
    return p;
}

ZPoly reversed(const ZPoly& p)
{
    ZPoly r(p.rbegin(), p.rend());
    trim(r);
    return r;
}

int sign_variations(const ZPoly& p)
{
    int count = 0;
    int last = 0;
    for (const auto& c : p) {
        const int s = sgn(c);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++count;
        }
        last = s;
    }
    return count;
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b)
{
    if (b.empty()) {
        throw Error(Errc::ZeroPolynomial, "exact division by the zero polynomial");
    }
    if (a.empty()) {
        return ZPoly{};
    }
    const int da = degree(a);
    const int db = degree(b);
    if (da < db) {
        return std::nullopt;
    }
    // Cheap necessary condition on the constant terms first.
    if (sgn(b[0]) != 0 && !mpz_divisible_p(a[0].get_mpz_t(), b[0].get_mpz_t())) {
        return std::nullopt;
    }
    ZPoly r = a;
    ZPoly q(static_cast<std::size_t>(da - db + 1));
    const Integer& lcb = b.back();
    for (int k = da - db; k >= 0; --k) {
        Integer& top = r[static_cast<std::size_t>(k + db)];
        if (!mpz_divisible_p(top.get_mpz_t(), lcb.get_mpz_t())) {
            return std::nullopt;
        }
        Integer qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lcb.get_mpz_t());
        if (sgn(qk) != 0) {
            for (int i = 0; i <= db; ++i) {
                mpz_submul(r[static_cast<std::size_t>(k + i)].get_mpz_t(), qk.get_mpz_t(), b[static_cast<std::size_t>(i)].get_mpz_t());
            }
        }
        q[static_cast<std::size_t>(k)] = std::move(qk);
    }
    for (int i = 0; i < db; ++i) {
        if (sgn(r[static_cast<std::size_t>(i)]) != 0) {
            return std::nullopt;
        }
    }
    trim(q);
    return q;
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b)
{
    if (b.empty()) {
        throw Error(Errc::ZeroPolynomial, "pseudo-remainder by the zero polynomial");
    }
    const int db = degree(b);
    ZPoly r = a;
    trim(r);
    if (degree(r) < db) {
        return r;
    }
    int e = degree(r) - db + 1;
    const Integer& lcb = b.back();
    while (!r.empty() && degree(r) >= db) {
        const int shift = degree(r) - db;
        const Integer lr = r.back();
        for (auto& c : r) {
            c *= lcb;
        }
        for (int i = 0; i <= db; ++i) {
            mpz_submul(r[static_cast<std::size_t>(i + shift)].get_mpz_t(), lr.get_mpz_t(), b[static_cast<std::size_t>(i)].get_mpz_t());
        }
        trim(r);
        --e;
    }
    if (e > 0) {
        const Integer f = pow(lcb, static_cast<unsigned>(e));
        for (auto& c : r) {
            c *= f;
        }
    }
    return r;
}

namespace {

Integer bareiss_det(std::vector<std::vector<Integer>> m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    int sign_flip = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m[k][k]) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m[swap_row][k]) == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(m[k], m[swap_row]);
            sign_flip = -sign_flip;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k];
                mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    Integer det = m[n - 1][n - 1];
    return sign_flip < 0 ? Integer(-det) : det;
}

// Resultant when at least one side is a constant.
std::optional<Integer> trivial_resultant(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) {
        return Integer(0);
    }
    if (degree(a) == 0) {
        return pow(a[0], static_cast<unsigned>(degree(b)));
    }
    if (degree(b) == 0) {
        return pow(b[0], static_cast<unsigned>(degree(a)));
    }
    return std::nullopt;
}

} // namespace

Integer resultant_sylvester(const ZPoly& a0, const ZPoly& b0)
{
    ZPoly a = a0;
    ZPoly b = b0;
    trim(a);
    trim(b);
    if (auto t = trivial_resultant(a, b)) {
        return *t;
    }
    const int m = degree(a);
    const int n = degree(b);
    const std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
    for (int row = 0; row < n; ++row) {
        for (int i = 0; i <= m; ++i) {
            s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + i)] = a[static_cast<std::size_t>(m - i)];
        }
    }
    for (int row = 0; row < m; ++row) {
        for (int i = 0; i <= n; ++i) {
            s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + i)] = b[static_cast<std::size_t>(n - i)];
        }
    }
    return bareiss_det(std::move(s));
}

Integer resultant_prs(const ZPoly& a0, const ZPoly& b0)
{
    ZPoly a = a0;
    ZPoly b = b0;
    trim(a);
    trim(b);
    if (auto t = trivial_resultant(a, b)) {
        return *t;
    }
    const Integer ca = content(a);
    const Integer cb = content(b);
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    Integer t = pow(ca, static_cast<unsigned>(degree(b))) * pow(cb, static_cast<unsigned>(degree(a)));
    int s = 1;
    if (degree(a) < degree(b)) {
        if ((degree(a) & 1) && (degree(b) & 1)) {
            s = -1;
        }
        std::swap(a, b);
    }
    Integer g = 1;
    Integer h = 1;
    while (true) {
        const int da = degree(a);
        const int db = degree(b);
        const int delta = da - db;
        if ((da & 1) && (db & 1)) {
            s = -s;
        }
        ZPoly r = pseudo_remainder(a, b);
        if (r.empty()) {
            return 0;
        }
        a = std::move(b);
        // b = r / (g * h^delta)
        Integer divisor = g * pow(h, static_cast<unsigned>(delta));
        for (auto& c : r) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        }
        b = std::move(r);
        g = a.back();
        // h = g^delta / h^(delta - 1)
        if (delta == 0) {
            // h^1 * g^0
        } else {
            Integer num = pow(g, static_cast<unsigned>(delta));
            Integer den = pow(h, static_cast<unsigned>(delta - 1));
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (degree(b) == 0) {
            break;
        }
    }
    // h = lc(b)^deg(a) / h^(deg(a) - 1)
    const int da = degree(a);
    Integer num = pow(b.back(), static_cast<unsigned>(da));
    Integer den = pow(h, static_cast<unsigned>(da - 1));
    Integer res;
    mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    res *= t;
    return s < 0 ? Integer(-res) : res;
}

Integer resultant(const ZPoly& a, const ZPoly& b, int sylvester_cutoff)
{
    if (degree(a) <= sylvester_cutoff && degree(b) <= sylvester_cutoff) {
        return resultant_sylvester(a, b);
    }
    return resultant_prs(a, b);
}

ZPoly gcd(const ZPoly& a0, const ZPoly& b0)
{
    ZPoly a = primitive(a0);
    ZPoly b = primitive(b0);
    if (a.empty() && b.empty()) {
        throw Error(Errc::ZeroPolynomial, "gcd of two zero polynomials");
    }
    auto normalize = [](ZPoly p) {
        p = primitive(std::move(p));
        if (!p.empty() && sgn(p.back()) < 0) {
            for (auto& c : p) {
                c = -c;
            }
        }
        return p;
    };
    if (a.empty()) {
        return normalize(std::move(b));
    }
    if (b.empty()) {
        return normalize(std::move(a));
    }
    if (degree(a) == 0 || degree(b) == 0) {
        return ZPoly{1};
    }
    Integer gamma;
    mpz_gcd(gamma.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    modp::PrimeStream primes;
    int best_degree = std::min(degree(a), degree(b)) + 1;
    std::optional<modp::Crt> crt;
    std::vector<Integer> previous;
    for (;;) {
        const modp::u64 p = primes.next();
        const modp::Field f{p};
        const modp::u64 gamma_p = f.reduce(gamma);
        if (gamma_p == 0) {
            continue;
        }
        modp::PolyP ap = modp::reduce(a, f);
        modp::PolyP bp = modp::reduce(b, f);
        if (modp::degree(ap) != degree(a) || modp::degree(bp) != degree(b)) {
            continue;
        }
        modp::PolyP gp = modp::gcd_monic(std::move(ap), std::move(bp), f);
        const int dg = modp::degree(gp);
        if (dg == 0) {
            return ZPoly{1};
        }
        if (dg > best_degree) {
            continue; // unlucky prime
        }
        if (dg < best_degree) {
            best_degree = dg;
            crt.emplace(static_cast<std::size_t>(dg + 1));
            previous.clear();
        }
        for (auto& c : gp) {
            c = f.mul(c, gamma_p);
        }
        crt->add(p, gp);
        std::vector<Integer> current = crt->symmetric();
        if (current == previous) {
            ZPoly candidate = normalize(ZPoly(current.begin(), current.end()));
            if (divide_exact(a, candidate) && divide_exact(b, candidate)) {
                return candidate;
            }
        }
        previous = std::move(current);
    }
}

} // namespace pcert::zpoly
