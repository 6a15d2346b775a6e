#pragma once

// Randomized property suites shared by the unit tests and the acceptance run.

#include "pcert/arith/rat_matrix.hpp"
#include "pcert/certify/bounds.hpp"
#include "pcert/mpoly/mpoly.hpp"
#include "pcert/upoly/resultant.hpp"
#include "pcert/upoly/roots.hpp"
#include "pcert/upoly/upoly.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace pcert::testing {

inline Rational random_rational(std::mt19937_64& rng, long lo, long hi, long max_den)
{
    std::uniform_int_distribution<long> den(1, max_den);
    const long d = den(rng);
    std::uniform_int_distribution<long> num(lo * d, hi * d);
    return make_rational(num(rng), d);
}

inline MPoly random_mpoly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_deg, int terms)
{
    std::uniform_int_distribution<int> ex(0, max_deg);
    std::uniform_int_distribution<long> co(-9, 9);
    MPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        Monomial e(vars.size());
        for (auto& k : e) {
            k = static_cast<unsigned>(ex(rng));
        }
        p.add_term(e, co(rng));
    }
    return p;
}

inline Box random_box(std::mt19937_64& rng, std::size_t dim)
{
    std::vector<Interval> iv;
    for (std::size_t k = 0; k < dim; ++k) {
        Rational a = random_rational(rng, -4, 4, 9);
        Rational b = a + random_rational(rng, 0, 2, 9);
        iv.emplace_back(a, b);
    }
    return Box(std::move(iv));
}

inline RationalVector random_point(std::mt19937_64& rng, const Box& box)
{
    std::uniform_int_distribution<long> t(0, 1000);
    RationalVector x;
    for (const auto& iv : box.intervals) {
        x.push_back(iv.lo + iv.width() * make_rational(t(rng), 1000));
    }
    return x;
}

struct SuiteResult {
    int cases = 0;
    long checks = 0;
    long violations = 0;
    bool passed() const { return cases > 0 && violations == 0; }
};

// lower <= p(x) <= upper at random points of random boxes, exactly.
inline SuiteResult bound_soundness(std::uint64_t seed, int pairs, int samples)
{
    std::mt19937_64 rng(seed);
    const std::vector<std::string> vars{"x", "y", "z"};
    SuiteResult r;
    std::uniform_int_distribution<int> terms(1, 8);
    for (int c = 0; c < pairs; ++c) {
        const MPoly p = random_mpoly(rng, vars, 4, terms(rng));
        const Box box = random_box(rng, vars.size());
        const BoundPair b = bound_on_box(p, box, positive_shift(box));
        ++r.cases;
        if (b.lower > b.upper) {
            ++r.violations;
        }
        for (int s = 0; s < samples; ++s) {
            const Rational v = eval_rat(p, random_point(rng, box));
            ++r.checks;
            if (v < b.lower || v > b.upper) {
                ++r.violations;
            }
        }
    }
    return r;
}

// Sturm root counts against sign changes on a grid fine enough to separate
// the roots of products of distinct rational linear factors.
inline SuiteResult sturm_vs_bisection(std::uint64_t seed, int polys)
{
    std::mt19937_64 rng(seed);
    SuiteResult r;
    std::uniform_int_distribution<int> deg(1, 10);
    for (int c = 0; c < polys; ++c) {
        const int d = deg(rng);
        // Distinct roots k/4 in [-5, 5], some paired with an x^2 + 1 factor.
        std::vector<long> quarters;
        std::uniform_int_distribution<long> q(-20, 20);
        UPoly p = UPoly::constant(1);
        int real = 0;
        while (p.degree() < d) {
            if (d - p.degree() >= 2 && (rng() & 3) == 0) {
                p *= UPoly({1, 0, 1});
                continue;
            }
            long k = q(rng);
            if (std::find(quarters.begin(), quarters.end(), k) != quarters.end()) {
                continue;
            }
            quarters.push_back(k);
            p *= UPoly::linear_root(make_rational(k, 4));
            ++real;
        }
        // Grid of step 1/8 offset by 1/16 never hits a root and separates them.
        int changes = 0;
        int prev = sign(p.eval(make_rational(-97, 16)));
        for (long i = -96; i <= 96; ++i) {
            const int s = sign(p.eval(make_rational(2 * i + 1, 16)));
            changes += s != prev ? 1 : 0;
            prev = s;
        }
        const int sturm = count_roots(p, make_rational(-97, 16), make_rational(97, 16), EndpointPolicy::Throw,
                                      IsolationMethod::Sturm);
        ++r.cases;
        r.checks += 2;
        if (sturm != changes) {
            ++r.violations;
        }
        if (sturm != real) {
            ++r.violations;
        }
    }
    return r;
}

// Sylvester determinant through the generic rational matrix code.
inline Rational sylvester_determinant(const UPoly& a, const UPoly& b)
{
    const int m = a.degree();
    const int n = b.degree();
    const auto size = static_cast<std::size_t>(m + n);
    RatMatrix s(size, size);
    for (int row = 0; row < n; ++row) {
        for (int i = 0; i <= m; ++i) {
            s(static_cast<std::size_t>(row), static_cast<std::size_t>(row + i)) = a.coeff(static_cast<std::size_t>(m - i));
        }
    }
    for (int row = 0; row < m; ++row) {
        for (int i = 0; i <= n; ++i) {
            s(static_cast<std::size_t>(n + row), static_cast<std::size_t>(row + i)) = b.coeff(static_cast<std::size_t>(n - i));
        }
    }
    return determinant(s);
}

// resultant() against the Sylvester determinant, degrees 1..6, rational
// coefficients, with a common factor forced in every fourth pair.
inline SuiteResult resultant_vs_sylvester(std::uint64_t seed, int pairs)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg(1, 6);
    auto poly = [&](int d) {
        std::vector<Rational> cs;
        for (int k = 0; k <= d; ++k) {
            cs.push_back(random_rational(rng, -9, 9, 5));
        }
        if (sgn(cs.back()) == 0) {
            cs.back() = 1;
        }
        return UPoly(cs);
    };
    SuiteResult r;
    for (int c = 0; c < pairs; ++c) {
        UPoly a = poly(deg(rng));
        UPoly b = poly(deg(rng));
        const bool forced = c % 4 == 3 && a.degree() < 6 && b.degree() < 6;
        if (forced) {
            const UPoly common = UPoly::linear_root(random_rational(rng, -3, 3, 4));
            a *= common;
            b *= common;
        }
        const Rational res = resultant(a, b);
        ++r.cases;
        r.checks += forced ? 2 : 1;
        if (res != sylvester_determinant(a, b)) {
            ++r.violations;
        }
        if (forced && res != 0) {
            ++r.violations;
        }
    }
    return r;
}

} // namespace pcert::testing
