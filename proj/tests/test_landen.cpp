#include "doctest.h"

#include "pcert/certify/certificate.hpp"
#include "pcert/error.hpp"
#include "pcert/landen/curve.hpp"
#include "pcert/landen/map.hpp"
#include "pcert/landen/periodic.hpp"
#include "pcert/upoly/roots.hpp"

#include <random>

using namespace pcert;

namespace {

const Precision P60{60};

BigFloat bf(double x) { return BigFloat(P60, x); }
BigFloat bf(std::string_view s) { return BigFloat(P60, s); }
BigFloat tol(long e) { return pow10(P60, e); }

Errc code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::StageFailed;
}

LandenState5 state(double a, double b, double c, double d, double e)
{
    return {bf(a), bf(b), bf(c), bf(d), bf(e)};
}

} // namespace

TEST_CASE("G fixes (3,3) and rejects the forbidden line")
{
    const PlanarPoint q = g_map(PlanarPoint{bf(3), bf(3)});
    CHECK(abs(q.a - 3) < tol(-55));
    CHECK(abs(q.b - 3) < tol(-55));
    CHECK(code_of([] { g_map(PlanarPoint{bf(-1), bf(-1)}); }) == Errc::OnForbiddenLine);
    CHECK(code_of([] { g_map(RationalPoint{Rational(-1), Rational(-1)}, P60); }) == Errc::OnForbiddenLine);
    // s = -2 exercises the real cube root.
    const PlanarPoint r = g_map(RationalPoint{Rational(-5), Rational(1)}, P60);
    const BigFloat c = real_cbrt(bf(-2));
    CHECK(abs(r.a - bf(-16) / (c * c * c * c)) < tol(-55));
    CHECK(abs(r.b - bf(2) / (c * c)) < tol(-55));
}

TEST_CASE("five-variable step")
{
    const LandenState5 s = state(3, 3, 1.5, -2, 0.25);
    const LandenState5 t = landen5_step(s);
    CHECK(abs(t.a - 3) < tol(-55));
    CHECK(abs(t.b - 3) < tol(-55));
    CHECK(abs(t.c - (s.d + s.e + s.c) / 4) < tol(-55));
    CHECK(abs(t.d - (6 * s.c + 6 * s.e + 2 * s.d) / 8) < tol(-55));
    CHECK(abs(t.e - (s.c + s.e) / 2) < tol(-55));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-6, 6);
    for (int k = 0; k < 20; ++k) {
        const LandenState5 x = state(u(rng), u(rng), u(rng), u(rng), u(rng));
        const LandenState5 y = landen5_step(x);
        const PlanarPoint g = g_map(PlanarPoint{x.a, x.b});
        CHECK(y.a == g.a);
        CHECK(y.b == g.b);
    }
    CHECK(code_of([] { landen5_step(state(-1, -1, 1, 1, 1)); }) == Errc::OnForbiddenLine);
}

TEST_CASE("resolvent values and invariance")
{
    CHECK(resolvent(Rational(3), Rational(3)) == 0);
    CHECK(resolvent(Rational(0), Rational(0)) == 27);
    CHECK(resolvent(Rational(1), Rational(2)) == -4 + 4 + 32 - 36 + 27);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-8, 8);
    for (int k = 0; k < 20; ++k) {
        const PlanarPoint p{bf(u(rng)), bf(u(rng))};
        const BigFloat s = p.a + p.b + 2;
        const BigFloat lhs = resolvent(g_map(p)) * pow(s, 4);
        const BigFloat rhs = pow(p.a - p.b, 2) * resolvent(p);
        CHECK(abs(lhs - rhs) <= tol(-40) * abs(rhs));
    }
}

TEST_CASE("integral closed forms")
{
    // (x^2+1)^-3 moments are Beta integrals: 3pi/16, pi/16, 3pi/16.
    const BigFloat pi16 = pi(P60) / 16;
    CHECK(abs(integral_I(state(3, 3, 1, 0, 0), tol(-20)) - 3 * pi16) < tol(-20));
    CHECK(abs(integral_I(state(3, 3, 0, 1, 0), tol(-20)) - pi16) < tol(-20));
    CHECK(abs(integral_I(state(3, 3, 0, 0, 1), tol(-20)) - 3 * pi16) < tol(-20));
    // 1/(x^6+1) moments: pi / (6 sin((2k+1) pi / 6)).
    const BigFloat pi3 = pi(P60) / 3;
    CHECK(abs(integral_I(state(0, 0, 2, -1, 5), tol(-20)) - (2 * pi3 - pi3 / 2 + 5 * pi3)) < tol(-20));
}

TEST_CASE("integral convergence region")
{
    CHECK(integral_converges(bf(0), bf(0)));
    CHECK(integral_converges(bf(3), bf(3)));
    // x^3 - 4x^2 + x + 1 is -1 at x = 1.
    CHECK_FALSE(integral_converges(bf(-4), bf(1)));
    CHECK(code_of([] { integral_I(state(-4, 1, 1, 1, 1), tol(-9)); }) == Errc::DivergentIntegral);
    // a < 0 with a single, negative, real root.
    CHECK(integral_converges(bf(-1), bf(1)));

    // Against sign changes of the cubic on a fine grid of [0, 50].
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-6, 6);
    for (int k = 0; k < 200; ++k) {
        const double a = u(rng), b = u(rng);
        bool positive_root = false;
        double prev = 1;
        for (int i = 1; i <= 50000; ++i) {
            const double y = i * 1e-3;
            const double v = ((y + a) * y + b) * y + 1;
            positive_root = positive_root || v <= 0 || (prev > 0) != (v > 0);
            prev = v;
        }
        CHECK(integral_converges(bf(a), bf(b)) == !positive_root);
    }
}

TEST_CASE("integral is invariant under the step")
{
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0, 5);
    std::uniform_real_distribution<double> w(-2, 2);
    const BigFloat t = tol(-9);
    for (int k = 0; k < 10; ++k) {
        const LandenState5 s = state(u(rng), u(rng), w(rng), w(rng), w(rng));
        const BigFloat i0 = integral_I(s, t);
        const BigFloat i1 = integral_I(landen5_step(s), t);
        CHECK(abs(i1 - i0) < 10 * t);
    }
}

TEST_CASE("curve parametrization and the one-dimensional map")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-20, -0.05);
    for (int k = 0; k < 50; ++k) {
        BigFloat t = bf(u(rng));
        if (abs(t + 2) < bf(1e-3)) {
            continue;
        }
        const PlanarPoint q = param_P(t);
        CHECK(abs(resolvent(q)) < tol(-50) * (1 + abs(q.a * q.a * q.b * q.b)));
        CHECK(abs(param_P_inverse(q) - t) < tol(-40));
        CHECK(abs(g_one_dim(t) - param_P_inverse(g_map(q))) < tol(-40));
    }
    const BigFloat p = g_fixed_point(P60);
    CHECK(abs(p - bf(-4.4111)) < bf(1e-4));
    CHECK(abs(g_one_dim(p) - p) < tol(-50));
    CHECK(abs(g_one_dim(-4 - 2 * sqrt(bf(3))) + 4) < tol(-40));
    CHECK(abs(g_one_dim(-4 + 2 * sqrt(bf(3))) + 4) < tol(-40));
    CHECK(code_of([] { g_one_dim(bf(0)); }) == Errc::DomainExcluded);
    CHECK(code_of([] { g_one_dim(bf(-2)); }) == Errc::DomainExcluded);
    CHECK(code_of([] { param_P(bf(0)); }) == Errc::DomainExcluded);
    // t = -2 is the point (-1, -1).
    const PlanarPoint m11 = param_P(bf(-2));
    CHECK(abs(m11.a + 1) < tol(-55));
    CHECK(abs(m11.b + 1) < tol(-55));
}

TEST_CASE("stable set classification")
{
    CHECK(classify_stable_set(param_P(bf(-10)), 500).kind == StableSetClass::ConvergesToP2);
    CHECK(classify_stable_set(PlanarPoint{bf(3.1), bf(2.9)}, 500).kind == StableSetClass::ConvergesToP1);
    const StableSetClass f = classify_stable_set(PlanarPoint{bf(-1), bf(-1)}, 500);
    CHECK(f.kind == StableSetClass::HitsForbiddenLine);
    CHECK(f.steps == 0);
    CHECK(f.to_string() == "HitsForbiddenLine(0)");
    // A diagonal point below the curve lands on it after one step.
    const PlanarPoint d{bf(-6), bf(-6)};
    CHECK(resolvent(d) < 0);
    CHECK(classify_stable_set(d, 500).kind == StableSetClass::ConvergesToP2);
    // a + b = -3, ab = 1 gives s = -1 and G(a, b) = (-5, 3).
    const BigFloat r5 = sqrt(bf(5));
    const StableSetClass h = classify_stable_set(PlanarPoint{(r5 - 3) / 2, (-r5 - 3) / 2}, 10);
    CHECK(h.kind == StableSetClass::HitsForbiddenLine);
    CHECK(h.steps == 1);
}

TEST_CASE("interval dynamics on the curve")
{
    const IntervalDynamicsReport r = verify_interval_dynamics(P60, 200);
    CHECK(r.passed(tol(-30)));
    CHECK(abs(r.ell - bf(-2.6675)) < bf(1e-4));
    CHECK(abs(r.p - bf(-4.4111)) < bf(1e-4));
    CHECK(r.m_final_gap < tol(-30));
    CHECK(r.ell_final_gap < tol(-30));
}

TEST_CASE("substitution systems match their displayed forms")
{
    const UPoly d4 = fixed_point_poly();
    CHECK(d4 == fixed_point_poly_factored());
    CHECK(d4.degree() == 11);

    const std::vector<std::string> mn{"m", "n"};
    const std::vector<MPoly> s2 = period2_system();
    const MPoly d7 = MPoly::parse("-m^4*n^7 + m^5*n^4 + 2*m^4*n^4 + m^3*n^5 + 5*m^3*n^4 + 4*m^2*n^4 - n^6"
                                  " + 4*m^3*n^2 - 2*n^5 - n^4 - 8*n^3 - 8*n^2 - 16",
                                  mn);
    CHECK(s2[0] == d7);
    const std::vector<std::string> swap{"n", "m"};
    CHECK(s2[1] == rename_cyclic(d7, swap));

    const std::vector<std::string> mnr{"m", "n", "r"};
    const std::vector<MPoly> s3 = period3_system();
    const MPoly d10 = MPoly::parse("-m^4*n^3*r^4 + m^5*r^4 + 2*m^4*r^4 + m^3*r^5 + 5*m^3*r^4 + 4*m^2*r^4 - r^6"
                                   " + 4*m^3*r^2 - 2*r^5 - r^4 - 8*r^3 - 8*r^2 - 16",
                                   mnr);
    CHECK(s3[0] == d10);
    const std::vector<std::string> c1{"n", "r", "m"}, c2{"r", "m", "n"};
    CHECK(s3[1] == rename_cyclic(d10, c1));
    CHECK(s3[2] == rename_cyclic(d10, c2));
}

TEST_CASE("fixed points")
{
    const std::vector<FixedPoint> fp = fixed_points(P60);
    REQUIRE(fp.size() == 3);
    CHECK(fp[0].m_interval == Interval::point(2));
    CHECK(abs(fp[0].a - 3) < tol(-55));
    CHECK(abs(fp[0].b - 3) < tol(-55));
    CHECK(fp[0].classification == "super-attractor");

    CHECK(abs(fp[1].m - bf(1.20557)) < bf(1e-5));
    CHECK(abs(fp[1].a - bf(-4.20557)) < bf(1e-5));
    CHECK(abs(fp[1].b - bf(3.95774)) < bf(1e-5));
    CHECK(fp[1].classification == "saddle");
    CHECK(abs(fp[1].lambda1_re - bf(7.0701)) < bf(1e-4));
    CHECK(abs(fp[1].lambda2_re - bf(-0.4470)) < bf(1e-4));

    CHECK(abs(fp[2].m - bf(-1.35321)) < bf(1e-5));
    CHECK(abs(fp[2].a - bf(-5.30914)) < bf(1e-5));
    CHECK(abs(fp[2].b - bf(0.83118)) < bf(1e-5));
    CHECK(fp[2].classification == "unstable focus");

    for (int k : {1, 2}) {
        REQUIRE(fp[k].radical.has_value());
        CHECK(abs(fp[k].radical->a - fp[k].a) < tol(-50));
        CHECK(abs(fp[k].radical->b - fp[k].b) < tol(-50));
        const PlanarPoint g = g_map(PlanarPoint{fp[k].a, fp[k].b});
        CHECK(abs(g.a - fp[k].a) < tol(-50));
        CHECK(abs(g.b - fp[k].b) < tol(-50));
    }
    // m = 1.20557 root of the radical form with A = 172 + 12 sqrt(177).
    const BigFloat ca = real_cbrt(172 + 12 * sqrt(bf(177)));
    CHECK(abs(ca / 6 + 8 / (3 * ca) - bf(1) / 3 - fp[1].m) < tol(-50));
}

TEST_CASE("no points of minimal period two")
{
    const Period2Report r = period2_nonexistence();
    CHECK(r.d9.degree() == 69);
    CHECK(r.p56.degree() == 56);
    CHECK(r.p56_real_roots_sturm == 0);
    CHECK(r.p56_real_roots_descartes == 0);
    CHECK(r.symmetric_resultant);
    REQUIRE(r.candidates.size() == 16);
    CHECK(r.no_minimal_period_two);

    int solutions = 0;
    for (const auto& c : r.candidates) {
        if (c.solution) {
            ++solutions;
            CHECK(c.fixed_point);
            CHECK(c.m_label == c.n_label);
        } else {
            CHECK_FALSE(c.fixed_point);
        }
        const Certificate back = Certificate::from_json(nlohmann::json::parse(c.certificate.to_json().dump()));
        CHECK_NOTHROW(replay(back, period2_system()));
    }
    CHECK(solutions == 3);

    const std::vector<MPoly> s = period2_system();
    const RationalVector p22{2, 2}, pm12{-1, 2};
    CHECK(eval_rat(s[0], p22) == 0);
    CHECK(eval_rat(s[1], p22) == 0);
    CHECK(eval_rat(s[0], pm12) != 0);
    for (const auto& c : r.candidates) {
        if (c.m_label == "-1" && c.n_label == "2") {
            CHECK(c.certificate.kind != CertKind::MirandaCertified);
            CHECK(c.method == "exact");
        }
    }
}

TEST_CASE("orbit point bounds")
{
    const PointBounds one = point_bounds(Interval::point(1), Interval::point(1));
    CHECK(one.a.lower == -6);
    CHECK(one.a.upper == -6);
    CHECK(one.b.lower == 5);
    CHECK(one.b.upper == 5);
    CHECK(code_of([] { point_bounds(Interval(1, 2), Interval(-1, 1)); }) == Errc::ZeroInR);

    // Sampled containment on both signs of r.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> q(-400, 400);
    for (int k = 0; k < 200; ++k) {
        Rational mlo = make_rational(q(rng), 97);
        Interval m(mlo, mlo + make_rational(std::abs(q(rng)) + 1, 1000));
        Rational rlo = make_rational(std::abs(q(rng)) + 1, 53);
        Interval r(rlo, rlo + make_rational(std::abs(q(rng)) + 1, 1000));
        if (k % 2) {
            r = Interval(-r.hi, -r.lo);
        }
        const PointBounds pb = point_bounds(m, r);
        for (int s = 0; s <= 10; ++s) {
            const Rational mm = m.lo + m.width() * make_rational(s, 10);
            const Rational rr = r.hi - r.width() * make_rational((s * 7) % 11, 10);
            const Rational a = mm * mm * mm - rr - 2 - 4 / (rr * rr);
            const Rational b = rr + 4 / (rr * rr);
            CHECK(pb.a.lower <= a);
            CHECK(a <= pb.a.upper);
            CHECK(pb.b.lower <= b);
            CHECK(b <= pb.b.upper);
        }
    }

    const Box box({Interval(1, 2), Interval(3, 4), Interval(5, 6)}, {1, 2, 3});
    const Box rot = rotate_box(box);
    CHECK(rot.labels == std::vector<int>{2, 3, 1});
    CHECK(rot.intervals[2] == Interval(1, 2));
    const auto ob = orbit_bounds(box);
    CHECK(ob[1].a == orbit_bounds(rot)[0].a);
}
