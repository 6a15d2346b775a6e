#include "doctest.h"
#include "properties.hpp"

#include "pcert/error.hpp"
#include "pcert/upoly/resultant.hpp"
#include "pcert/upoly/roots.hpp"
#include "pcert/upoly/upoly.hpp"
#include "pcert/upoly/zpoly.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace pcert;

namespace {

UPoly P(std::initializer_list<long> ascending)
{
    std::vector<Rational> cs;
    for (long c : ascending) {
        cs.emplace_back(c);
    }
    return UPoly(std::move(cs));
}

UPoly from_roots(const std::vector<Rational>& roots, const Rational& lead = 1)
{
    UPoly p = UPoly::constant(lead);
    for (const auto& r : roots) {
        p *= UPoly::linear_root(r);
    }
    return p;
}

UPoly d4()
{
    // -(m-2)(m^2-m+1)(m^2+m+2)(m^3+m^2-m-2)(m^3+m^2+m+2)
    return -(P({-2, 1}) * P({1, -1, 1}) * P({2, 1, 1}) * P({-2, -1, 1, 1}) * P({2, 1, 1, 1}));
}

UPoly random_poly(std::mt19937_64& rng, int degree, long span = 9)
{
    std::uniform_int_distribution<long> c(-span, span);
    std::vector<Rational> cs(static_cast<std::size_t>(degree + 1));
    for (auto& x : cs) {
        x = c(rng);
    }
    if (sgn(cs.back()) == 0) {
        cs.back() = 1;
    }
    return UPoly(std::move(cs));
}

} // namespace

TEST_CASE("construction trims and serializes")
{
    const UPoly p = P({-2, 0, 1, 0, 0});
    CHECK(p.degree() == 2);
    CHECK(UPoly().degree() == -1);
    CHECK(P({0, 0}).is_zero());
    CHECK(p.to_string("x") == "x^2 - 2");
    CHECK(P({1, -3, 0, 2}).to_string("m") == "2*m^3 - 3*m + 1");
    CHECK(p.to_coefficient_list() == "[-2/1, 0/1, 1/1]");
    CHECK(UPoly::from_coefficient_list(p.to_coefficient_list()) == p);
    CHECK(UPoly::from_coefficient_list("[1/2, -3]") == UPoly({make_rational(1, 2), -3}));
    CHECK(p.hash() == UPoly::from_coefficient_list("[-2, 0, 1]").hash());
    CHECK(p.hash() != P({-3, 0, 1}).hash());
}

TEST_CASE("arithmetic and division")
{
    const UPoly a = P({1, 2, 3});
    const UPoly b = P({-1, 1});
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(divide_exact(a * b, b) == a);
    CHECK_THROWS_AS(divide_exact(a, b), Error);
    CHECK(pow(b, 3) == b * b * b);
    CHECK(a.taylor_shift(2).eval(0) == a.eval(2));
    CHECK(P({0, 0, 5, 1}).x_valuation() == 2);
    CHECK(P({0, 0, 5, 1}).drop_low(2) == P({5, 1}));
}

TEST_CASE("eval")
{
    CHECK(P({-2, 0, 1}).eval(2) == 2);
    CHECK(d4().eval(2) == 0);
    // d4(1) against the product of factor values.
    CHECK(d4().eval(1) == Rational(-(1 - 2) * (1 - 1 + 1) * (1 + 1 + 2) * (1 + 1 - 1 - 2) * (1 + 1 + 1 + 2)));
    const BigFloat x(Precision{40}, make_rational(3, 7));
    const BigFloat y = P({1, -3, 0, 2}).eval_float(x);
    CHECK(abs(y - BigFloat(Precision{40}, P({1, -3, 0, 2}).eval(make_rational(3, 7)))) < pow10(Precision{40}, -38));
}

TEST_CASE("gcd_poly")
{
    const UPoly a = from_roots({1, -2});
    const UPoly b = from_roots({1, -3});
    CHECK(gcd_poly(a, b) == P({-1, 1}));
    CHECK(gcd_poly(a * Rational(7), UPoly()) == a);
    CHECK(gcd_poly(P({1, 1}), P({2, 1})) == UPoly::constant(1));
    CHECK_THROWS_AS(gcd_poly(UPoly(), UPoly()), Error);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 40; ++t) {
        const UPoly g = random_poly(rng, 3);
        const UPoly u = random_poly(rng, 5);
        const UPoly v = random_poly(rng, 4);
        const UPoly h = gcd_poly(g * u, g * v);
        // g divides the result and the result divides both products.
        CHECK(divrem(h, g.monic()).second.is_zero());
        CHECK(divrem(g * u, h).second.is_zero());
        CHECK(divrem(g * v, h).second.is_zero());
        CHECK(h.lc() == 1);
    }
}

TEST_CASE("squarefree_part")
{
    const UPoly p = pow(P({-1, 1}), 3) * pow(P({2, 1}), 2) * P({1, 0, 1});
    CHECK(squarefree_part(p) == P({-1, 1}) * P({2, 1}) * P({1, 0, 1}));
}

TEST_CASE("sturm_sequence")
{
    const auto chain = sturm_sequence(P({-2, 0, 1}));
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == P({-2, 0, 1}));
    CHECK(chain[1] == P({0, 2}));
    CHECK(chain[2] == P({2}));

    const auto cube = sturm_sequence(P({0, 0, 0, 1}));
    const Rational big = 1000;
    CHECK(sturm_variations(cube, -big) - sturm_variations(cube, big) == 1);

    const auto c4 = sturm_sequence(d4());
    CHECK(sturm_variations(c4, -100) - sturm_variations(c4, 100) == 3);
    CHECK_THROWS_AS(sturm_sequence(UPoly()), Error);
}

TEST_CASE("count_roots")
{
    CHECK(count_roots(P({-2, 0, 1}), 0, 2) == 1);
    CHECK(count_roots(d4(), -100, 100) == 3);
    CHECK(count_roots(from_roots({1, 2, 3}), 1, 3) == 1);
    try {
        count_roots(from_roots({1, 2, 3}), 1, 3, EndpointPolicy::Throw);
        FAIL("expected EndpointIsRoot");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EndpointIsRoot);
    }

    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> root(-20, 20);
    for (int t = 0; t < 20; ++t) {
        std::vector<Rational> roots;
        std::set<long> distinct;
        for (int i = 0; i < 8; ++i) {
            const long r = root(rng);
            roots.emplace_back(r);
            distinct.insert(r);
        }
        const UPoly p = from_roots(roots, 3) * P({5, 0, 1});
        CHECK(count_roots(p, make_rational(-101, 2), make_rational(101, 2)) == static_cast<int>(distinct.size()));
    }
}

TEST_CASE("count_roots is additive across a non-root split point")
{
    std::mt19937_64 rng(12);
    for (int t = 0; t < 30; ++t) {
        const UPoly p = random_poly(rng, 7);
        const Rational a = -20;
        const Rational c = 20;
        const Rational b = make_rational(static_cast<long>(rng() % 400) - 200, 11);
        if (sgn(p.eval(b)) == 0 || sgn(p.eval(a)) == 0 || sgn(p.eval(c)) == 0) {
            continue;
        }
        CHECK(count_roots(p, a, b) + count_roots(p, b, c) == count_roots(p, a, c));
    }
}

TEST_CASE("Sturm and Descartes counting agree")
{
    // Degree 60 forces the Descartes path; the Sturm chain count is the oracle.
    std::vector<Rational> roots;
    for (long i = -14; i <= 15; ++i) {
        roots.push_back(make_rational(i, 3));
    }
    UPoly p = from_roots(roots);
    for (long k = 1; k <= 15; ++k) {
        p *= P({k, 0, 1});
    }
    REQUIRE(squarefree_part(p).degree() == 60);
    const Rational lo = make_rational(-31, 7);
    const Rational hi = make_rational(17, 5);
    const auto chain = sturm_sequence(squarefree_part(p));
    CHECK(count_roots(p, lo, hi) == sturm_variations(chain, lo) - sturm_variations(chain, hi));
}

TEST_CASE("isolate_roots small cases")
{
    const RootIsolation a = isolate_roots(from_roots({1, -2}), make_rational(1, 100));
    CHECK(a.intervals.empty());
    CHECK(a.exact_roots == std::vector<Rational>{-2, 1});

    const Rational eps = Rational(1) / Rational(pow(Integer(10), 20u));
    const RootIsolation b = isolate_roots(P({-2, 0, 1}), eps);
    REQUIRE(b.intervals.size() == 2);
    CHECK(b.exact_roots.empty());
    for (const auto& iv : b.intervals) {
        CHECK(iv.width() <= eps);
        // Bisection oracle: x^2 - 2 changes sign across the interval.
        CHECK(sgn(iv.lo * iv.lo - 2) * sgn(iv.hi * iv.hi - 2) < 0);
    }
    CHECK(b.intervals[0].hi < 0);
    CHECK(b.intervals[1].lo > 0);
    CHECK(to_decimal(b.intervals[1].lo, 9) == "1.41421356");
}

TEST_CASE("isolate_roots recovers planted rational roots")
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> num(-40, 40);
    std::uniform_int_distribution<long> den(1, 6);
    for (int t = 0; t < 25; ++t) {
        std::vector<Rational> roots;
        std::set<Rational> distinct;
        const int count = 1 + static_cast<int>(rng() % 10);
        for (int i = 0; i < count; ++i) {
            const Rational r = make_rational(num(rng), den(rng));
            roots.push_back(r);
            distinct.insert(r);
        }
        const UPoly p = from_roots(roots, make_rational(-2, 3)) * P({3, 1, 1});
        const Rational w = make_rational(1, 1000);
        for (auto method : {IsolationMethod::Sturm, IsolationMethod::Descartes}) {
            const RootIsolation iso = isolate_roots(p, w, method);
            const auto all = iso.all_sorted();
            REQUIRE(all.size() == distinct.size());
            auto it = distinct.begin();
            for (const auto& iv : all) {
                CHECK(iv.contains(*it));
                CHECK((iv.is_degenerate() || iv.width() <= w));
                if (!iv.is_degenerate()) {
                    CHECK(sgn(p.eval(iv.lo)) != 0);
                    CHECK(sgn(p.eval(iv.hi)) != 0);
                    CHECK(count_roots(p, iv.lo, iv.hi) == 1);
                }
                ++it;
            }
            for (std::size_t i = 1; i < all.size(); ++i) {
                CHECK(all[i - 1].hi < all[i].lo);
            }
        }
    }
}

TEST_CASE("squarefree preprocessing leaves the root set unchanged")
{
    const UPoly p = pow(P({-2, 0, 1}), 3) * pow(P({1, 3}), 2) * P({-5, 1});
    const Rational w = make_rational(1, 1 << 20);
    const auto a = isolate_roots(p, w).all_sorted();
    const auto b = isolate_roots(divide_exact(p, gcd_poly(p, p.derivative())), w).all_sorted();
    CHECK(a == b);
    CHECK(a.size() == 4);
}

TEST_CASE("refine_root")
{
    const UPoly p = P({-2, 0, 1});
    const Interval iv = refine_root(p, Interval(1, 2), make_rational(1, 1 << 30));
    CHECK(iv.width() <= make_rational(1, 1 << 30));
    CHECK(iv.lo * iv.lo < 2);
    CHECK(iv.hi * iv.hi > 2);
    // Root at an end: the result must move off it.
    const UPoly q = from_roots({0, make_rational(1, 3)});
    const Interval e = refine_root(q, Interval(0, 1), make_rational(1, 4));
    CHECK(e.contains(make_rational(1, 3)));
    CHECK(e.width() <= make_rational(1, 4));
    CHECK(sgn(q.eval(e.lo)) != 0);
    CHECK(sgn(q.eval(e.hi)) != 0);
}

TEST_CASE("resultant")
{
    CHECK(resultant(P({-1, 1}), P({1, 1})) == 2);
    CHECK(resultant(P({-1, 0, 1}), P({-1, 1})) == 0);
    CHECK(resultant(P({3}), P({1, 1, 1})) == 9);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const UPoly a = random_poly(rng, 3) * make_rational(1, 1 + static_cast<long>(rng() % 5));
        const UPoly b = random_poly(rng, 3);
        CHECK(resultant(a, b) == testing::sylvester_determinant(a, b));
    }
}

TEST_CASE("resultant against the Sylvester determinant, degree at most 6")
{
    const auto r = testing::resultant_vs_sylvester(5, 200);
    CHECK(r.cases == 200);
    CHECK(r.violations == 0);
}

TEST_CASE("Sylvester and subresultant PRS agree")
{
    std::mt19937_64 rng(17);
    for (int t = 0; t < 30; ++t) {
        const int da = 1 + static_cast<int>(rng() % 20);
        const int db = 1 + static_cast<int>(rng() % 20);
        const ZPoly a = zpoly::from_upoly(random_poly(rng, da, 1000));
        const ZPoly b = zpoly::from_upoly(random_poly(rng, db, 1000));
        CHECK(zpoly::resultant_prs(a, b) == zpoly::resultant_sylvester(a, b));
    }
}

TEST_CASE("resultant vanishes exactly when the gcd is nontrivial")
{
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
        UPoly a = random_poly(rng, 3, 3);
        UPoly b = random_poly(rng, 2, 3);
        if (t % 2 == 0) {
            const UPoly common = P({static_cast<long>(rng() % 5) - 2, 1});
            a *= common;
            b *= common;
        }
        CHECK((sgn(resultant(a, b)) == 0) == (gcd_poly(a, b).degree() >= 1));
    }
}

TEST_CASE("discriminant")
{
    for (long b = -4; b <= 4; ++b) {
        for (long c = -4; c <= 4; ++c) {
            CHECK(discriminant(P({c, b, 1})) == Rational(b * b - 4 * c));
        }
    }
    CHECK(discriminant(P({1, 0, 0, 1})) == -27);
    CHECK(discriminant(P({1, -2, 1})) == 0);
    try {
        discriminant(P({1, 1}));
        FAIL("expected DegreeTooLow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DegreeTooLow);
    }
    // Planted roots: lc^(2n-2) * prod (ri - rj)^2.
    const std::vector<Rational> r{make_rational(1, 2), -3, 4, make_rational(-7, 5)};
    const Rational lead = 3;
    Rational oracle = pow(lead, 6);
    for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j < r.size(); ++j) {
            oracle *= (r[i] - r[j]) * (r[i] - r[j]);
        }
    }
    CHECK(discriminant(from_roots(r, lead)) == oracle);
}
