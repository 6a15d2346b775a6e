#pragma once

#include "pcert/certify/box.hpp"
#include "pcert/certify/certificate.hpp"
#include "pcert/certify/miranda.hpp"
#include "pcert/landen/map.hpp"
#include "pcert/mpoly/cache.hpp"
#include "pcert/mpoly/mpoly.hpp"
#include "pcert/upoly/upoly.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pcert {

// Orbit points in terms of the cube-root parameters: the point (a, b) with
// a + b + 2 = M^3 whose image has parameter R satisfies
//   a = (M^3 R^2 - R^3 - 2R^2 - 4) / R^2,  b = (R^3 + 4) / R^2.
// The systems below are numerators of the remaining equations after
// substituting these forms, with monomial content removed.

// Fixed points, in m.
UPoly fixed_point_poly();
// d4 as the displayed product of irreducible factors.
UPoly fixed_point_poly_factored();
// Period two, in (m, n): {d7, d8} with d8(m, n) = d7(n, m).
std::vector<MPoly> period2_system();
// Period three, in (m, n, r): {d10, d11, d12}, cyclic in the variables.
std::vector<MPoly> period3_system();

struct FixedPoint {
    std::string name;
    Interval m_interval; // isolating interval of the parameter m
    BigFloat m, a, b;
    BigFloat trace, det;
    BigFloat lambda1_re, lambda1_im, lambda2_re, lambda2_im;
    std::string classification;
    std::optional<PlanarPoint> radical; // closed-form cross-check where known

    nlohmann::json to_json(int digits) const;
};

std::vector<FixedPoint> fixed_points(Precision prec = kDefaultPrecision);

struct Period2Candidate {
    std::string m_label, n_label;
    Box box;
    bool solution = false;     // d7 = d8 = 0 shown exactly
    bool fixed_point = false;  // m = n is a fixed-point parameter
    std::string method;
    Certificate certificate;
};

struct Period2Report {
    UPoly d9;
    UPoly p56;
    int p56_real_roots_sturm = -1;
    int p56_real_roots_descartes = -1;
    bool symmetric_resultant = false; // Res(d7, d8; m) = -d9 in the other variable
    std::vector<Period2Candidate> candidates;
    bool no_minimal_period_two = false;
    double seconds = 0;

    nlohmann::json to_json() const;
};

// Throws Error(FactorizationMismatch) if d9 does not split as expected.
Period2Report period2_nonexistence();

struct EliminationChain {
    MPoly d13, d14;    // Res(d10, d12; m), Res(d11, d12; m) in (n, r)
    UPoly d15, d16;    // Res(d13, d14; r) in n, Res(d13, d14; n) in r
    UPoly gcd;         // gcd(d15, d16)
    unsigned n_power = 0;
    UPoly d17;         // gcd / n^n_power
    bool from_cache = false;
    double seconds = 0;

    nlohmann::json summary() const;
};

EliminationChain elimination_chain(const std::vector<MPoly>& system, const DiskCache* cache = nullptr);

struct PointBounds {
    BoundPair a;
    BoundPair b;
};

// Bounds for a(M, R) = M^3 - R - 2 - 4/R^2 and b(R) = R + 4/R^2, termwise
// monotone on each sign of R. Throws Error(ZeroInR).
PointBounds point_bounds(const Interval& m, const Interval& r);

// The three orbit points of a parameter box (m, n, r), taken from the
// parameter pairs (m, r), (n, m) and (r, n).
std::array<PointBounds, 3> orbit_bounds(const Box& param_box);

struct Period3Options {
    const DiskCache* cache = nullptr;
    unsigned workers = 0;
    Rational xi = 30;
    Rational isolation_width = Rational(1, Integer("100000000000000000000"));
    // Root refinement used for the analytic localization of the points.
    Rational localization_width = Rational(1, Integer("1000000000000000000000000"));
    MirandaOptions miranda;
};

struct PeriodicOrbitResult {
    int period = 3;
    std::vector<Interval> roots; // labelled intervals, 1-based in box labels
    std::vector<Box> parameter_boxes;   // certified boxes, orbit by orbit
    std::vector<Box> localization_boxes; // refined sub-boxes holding the same solutions
    std::vector<PointBounds> coordinate_bounds; // point (a, b) of each parameter box
    std::vector<int> box_certificate; // index into certificates of the Miranda certificate
    std::vector<int> box_rotation;    // 0 for the certified box, k for its k-th cyclic shift
    std::vector<std::array<int, 3>> orbits; // indices into parameter_boxes
    std::vector<Certificate> certificates;
    nlohmann::json report;

    nlohmann::json to_json() const;
    std::string orbit_csv() const;
};

// (m, n, r) -> (n, r, m), labels included.
Box rotate_box(const Box& b);

PeriodicOrbitResult period3_pipeline(const Period3Options& opt = {});

// Orbit points from parameter midpoints: |G^3(x) - x|, |G(x_k) - x_{k+1}| and
// the least pairwise distance, per orbit.
struct OrbitCheck {
    BigFloat return_defect;
    BigFloat step_defect;
    BigFloat min_separation;
};

OrbitCheck check_orbit(const Box& param_box, Precision prec = kDefaultPrecision);

} // namespace pcert
