#pragma once

#include "pcert/manifold/manifold.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace pcert {

using Residual = std::function<BigFloat(const PlanarPoint&)>;

struct NewtonResult {
    PlanarPoint point;
    BigFloat residual; // max-norm of the two residuals at `point`
    int iterations = 0;
};

// Damped Newton for two equations in (a, b) at `digits` precision. The Jacobian
// uses symmetric differences with step 10^(-digits/2); a step that increases
// the residual is halved up to 20 times. Stops once the residual is below
// 10^(-digits+10). Throws Error(NoConvergence).
NewtonResult newton2(const std::array<Residual, 2>& f, const PlanarPoint& start, unsigned digits,
                     int max_iterations = 60);

struct ManifoldPoint {
    std::string name;
    std::string system; // equations solved, e.g. "D1,D3"
    PlanarPoint point;
    BigFloat r{kDefaultPrecision}; // manifold parameter
    BigFloat residual{kDefaultPrecision};
    int iterations = 0;
};

struct HomoclinicReport {
    Precision precision;
    unsigned order = 5;
    EigenNormalization normalization = EigenNormalization::UnitFirstComponent;
    BigFloat lambda1{kDefaultPrecision}, lambda2{kDefaultPrecision};
    std::vector<BigFloat> w; // w_2 .. w_order
    BigFloat jet_residual{kDefaultPrecision};
    std::vector<ManifoldPoint> points; // P, P~, Q, Q_-1
    BigFloat resolvent_G3P{kDefaultPrecision};     // |R(G^3(P))|
    BigFloat diagonal_G2P{kDefaultPrecision};      // |G^2(P)_1 - G^2(P)_2|
    BigFloat forbidden_GQm1{kDefaultPrecision};    // |G(Q_-1)_1 + G(Q_-1)_2 + 2|
    BigFloat image_gap_Qm1{kDefaultPrecision};     // |G(Q_-1) - Q|
    bool interleaved = false;   // r(Q) < r(P) < r(Q_-1) < 0, up to a common sign

    const ManifoldPoint& point(const std::string& name) const;
    nlohmann::json to_json(int digits) const;
};

HomoclinicReport homoclinic_report(Precision prec = kDefaultPrecision, unsigned order = 5,
                                   EigenNormalization norm = EigenNormalization::UnitFirstComponent);

// Samples of the manifold parametrization for plotting: rows of (r, a, b).
std::vector<std::array<BigFloat, 3>> sample_manifold(const UnstableManifold& m, const BigFloat& r_min,
                                                     const BigFloat& r_max, int samples);

} // namespace pcert
