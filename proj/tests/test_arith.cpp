#include "doctest.h"

#include "pcert/arith/bigfloat.hpp"
#include "pcert/arith/interval.hpp"
#include "pcert/arith/rat_matrix.hpp"
#include "pcert/arith/rational.hpp"
#include "pcert/error.hpp"

#include <random>

using namespace pcert;

namespace {

Rational random_rational(std::mt19937_64& rng, long span = 50)
{
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return make_rational(num(rng), den(rng));
}

} // namespace

TEST_CASE("rational canonical form")
{
    const Rational q = make_rational(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(Rational(5)) == "5/1");
    CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("parse_rational accepts fractions, integers and decimals")
{
    CHECK(parse_rational("10/4") == make_rational(5, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-1.25") == make_rational(-5, 4));
    CHECK(parse_rational("1e-20") == Rational(1) / Rational(pow(Integer(10), 20u)));
    CHECK(parse_rational("2.5E3") == Rational(2500));
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}

TEST_CASE("to_decimal truncates")
{
    CHECK(to_decimal(make_rational(2, 3), 5) == "0.66666");
    CHECK(to_decimal(make_rational(-1, 8), 3) == "-0.125");
}

TEST_CASE("outward decimal rounding gives bounds")
{
    CHECK(to_decimal(make_rational(2, 3), 5, DecimalRounding::Up) == "0.66667");
    CHECK(to_decimal(make_rational(2, 3), 5, DecimalRounding::Down) == "0.66666");
    CHECK(to_decimal(make_rational(-2, 3), 5, DecimalRounding::Down) == "-0.66667");
    CHECK(to_decimal(make_rational(-2, 3), 5, DecimalRounding::Up) == "-0.66666");
    CHECK(to_decimal(make_rational(-1, 8), 3, DecimalRounding::Down) == "-0.125");
    CHECK(to_decimal(make_rational(99999, 10000), 3, DecimalRounding::Up) == "10.0");
    CHECK(to_decimal(make_rational(-99999, 100), 3, DecimalRounding::Down) == "-1000");

    std::mt19937_64 rng(8);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 999);
    for (int i = 0; i < 300; ++i) {
        const Rational x = make_rational(num(rng), den(rng));
        if (x == 0) {
            continue;
        }
        CHECK(parse_rational(to_decimal(x, 6, DecimalRounding::Down)) <= x);
        CHECK(parse_rational(to_decimal(x, 6, DecimalRounding::Up)) >= x);
    }
}

TEST_CASE("exactness properties on random rationals")
{
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 500; ++i) {
        const Rational x = random_rational(rng);
        const Rational y = random_rational(rng);
        CHECK((x + y) - y == x);
        if (sgn(y) != 0) {
            CHECK((x * y) / y == x);
        }
    }
}

TEST_CASE("real_cbrt")
{
    const Precision p{60};
    CHECK(real_cbrt(BigFloat(p, 8L)) == 2L);
    CHECK(real_cbrt(BigFloat(p, -8L)) == -2L);

    // Newton oracle on y^3 - 2 in exact rationals.
    Rational y = make_rational(5, 4);
    for (int i = 0; i < 8; ++i) {
        y = y - (y * y * y - 2) / (3 * y * y);
    }
    const BigFloat c = real_cbrt(BigFloat(p, 2L));
    const BigFloat diff = abs(c - BigFloat(p, y));
    CHECK(diff < pow10(p, -58));
    CHECK(c.to_string(25).rfind("1.2599210498948731647", 0) == 0);
    CHECK(abs(c * c * c - 2L) < pow10(p, -58));
}

TEST_CASE("real_cbrt cube round trip over twenty decades")
{
    const Precision p{60};
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mant(1.0, 10.0);
    std::uniform_int_distribution<int> expo(-20, 19);
    for (int i = 0; i < 200; ++i) {
        BigFloat x = BigFloat(p, mant(rng)) * pow10(p, expo(rng));
        if (i % 2) {
            x = -x;
        }
        const BigFloat c = real_cbrt(x);
        CHECK(sign(c.to_rational()) == x.sign());
        const BigFloat rel = abs((c * c * c - x) / x);
        CHECK(rel <= pow10(p, -58));
    }
}

TEST_CASE("BigFloat serialization keeps the precision")
{
    const BigFloat x(Precision{40}, make_rational(1, 3));
    const BigFloat y = BigFloat::deserialize(x.serialize());
    CHECK(y.precision() == Precision{40});
    CHECK(abs(x - y) < pow10(Precision{40}, -39));
    CHECK(kDefaultPrecision.digits == 60);
}

TEST_CASE("solve_exact")
{
    const RatMatrix id = RatMatrix::identity(3);
    const RationalVector b{1, 2, 3};
    CHECK(solve_exact(id, b) == b);

    const RatMatrix d{{2, 0}, {0, 4}};
    const RationalVector one{1, 1};
    CHECK(solve_exact(d, one) == RationalVector{make_rational(1, 2), make_rational(1, 4)});

    const RatMatrix singular{{1, 2}, {2, 4}};
    try {
        solve_exact(singular, one);
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularMatrix);
    }
}

TEST_CASE("invert_exact")
{
    CHECK(invert_exact(RatMatrix::identity(2)) == RatMatrix::identity(2));
    const RatMatrix u{{1, 1}, {0, 1}};
    CHECK(invert_exact(u) == RatMatrix{{1, -1}, {0, 1}});
    CHECK_THROWS_AS(invert_exact(RatMatrix{{1, 2}, {3, 6}}), Error);
}

TEST_CASE("invert_exact times M is the identity on random 3x3 matrices")
{
    std::mt19937_64 rng(99);
    int inverted = 0;
    for (int t = 0; t < 100; ++t) {
        RatMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                m(i, j) = random_rational(rng, 1000);
            }
        }
        if (sgn(determinant(m)) == 0) {
            continue;
        }
        CHECK(invert_exact(m) * m == RatMatrix::identity(3));
        const RationalVector b{random_rational(rng), random_rational(rng), random_rational(rng)};
        const RationalVector x = solve_exact(m, b);
        CHECK(m * std::span<const Rational>(x) == b);
        ++inverted;
    }
    CHECK(inverted > 90);
}

TEST_CASE("interval helpers")
{
    const Interval iv(make_rational(1, 2), 2);
    CHECK(iv.width() == make_rational(3, 2));
    CHECK(iv.contains(Rational(1)));
    CHECK_FALSE(iv.contains(Rational(3)));
    CHECK(Interval::point(3).is_degenerate());
    CHECK(to_string(iv) == "[1/2, 2/1]");
    CHECK_THROWS_AS(Interval(2, 1), Error);
}
