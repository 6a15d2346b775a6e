#pragma once

#include "pcert/arith/rat_matrix.hpp"
#include "pcert/certify/box.hpp"
#include "pcert/certify/certificate.hpp"
#include "pcert/mpoly/mpoly.hpp"
#include "pcert/upoly/roots.hpp"
#include "pcert/upoly/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pcert {

// Closed-interval count of distinct real roots (ends included).
int count_roots_closed(const UPoly& p, const Interval& iv, IsolationMethod method = IsolationMethod::Auto);

// IdentifiedLowerPeriod when the coordinate intervals share a common part
// holding exactly one root of fixed_poly and each interval holds exactly one.
std::optional<Certificate> identify_lower_period(const Box& box, const UPoly& fixed_poly);

struct Preconditioned {
    std::vector<MPoly> f;
    RationalVector center;
    RatMatrix a{0, 0};
    std::vector<MPoly> g; // g = a * f
};

// a = Df(center)^-1 exactly. Throws Error(SingularJacobian).
Preconditioned precondition_at(const std::vector<MPoly>& system, const RationalVector& center);
Preconditioned precondition(const std::vector<MPoly>& system, const Box& box);

struct Zeros2Report {
    std::string alpha;
    std::string x;
    int specialization_roots = 0; // real roots of family(alpha0, x)
    int endpoint_roots = 0;       // real roots of family(alpha, lo) * family(alpha, hi)
    int discriminant_degree = 0;
    int discriminant_roots = 0; // real roots of the x-discriminant
    nlohmann::json to_json() const;
};

// No root of family(alpha, .) in J for any alpha in lambda (both closed).
// Throws Error(HypothesisFailed) naming the failing polynomial.
Zeros2Report zeros2_no_roots(const MPoly& family, const std::string& alpha, const std::string& x,
                             const Interval& lambda, const Interval& j, const Rational& alpha0);

// Same check for the family f * g, with disc(f g) taken as
// disc(f) disc(g) Res(f, g)^2 so the large product is never eliminated.
Zeros2Report zeros2_no_roots_product(const MPoly& f, const MPoly& g, const std::string& alpha, const std::string& x,
                                     const Interval& lambda, const Interval& j, const Rational& alpha0);

struct MirandaOptions {
    bool use_zeros2 = true;
    int bound_depth = 6;
};

// Opposite constant signs of g_i on the faces x_i = lo_i and x_i = hi_i, for
// every i. Throws Error(FaceSignUndetermined).
Certificate miranda_certify(const Preconditioned& g, const Box& box, const MirandaOptions& opt = {});
Certificate miranda_certify(const std::vector<MPoly>& g, const Box& box, const MirandaOptions& opt = {});

void replay_miranda(const Certificate& c, const std::vector<MPoly>& system);
void replay_identification(const Certificate& c);

} // namespace pcert
