#pragma once

#include "pcert/landen/map.hpp"
#include "pcert/manifold/jet.hpp"

#include <array>
#include <functional>
#include <vector>

namespace pcert {

struct Eigen2 {
    BigFloat lambda1; // unstable, |lambda1| > 1
    BigFloat lambda2; // stable, |lambda2| < 1
    Mat2 L;           // eigenvector columns, unstable first
    Mat2 L_inv;
};

enum class EigenNormalization {
    UnitFirstComponent, // first component 1 when nonzero
    UnitNorm,           // Euclidean norm 1, largest component positive
};

// Throws Error(NotHyperbolicSaddle) for complex, equal or non-saddle eigenvalues.
Eigen2 eigen2(const Mat2& m, EigenNormalization norm = EigenNormalization::UnitFirstComponent);

Mat2 inverse(const Mat2& m);

// A planar map acting on jets, e.g. G itself.
using JetMap = std::function<std::array<Jet2, 2>(const Jet2& a, const Jet2& b)>;

std::array<Jet2, 2> g_map_jet(const Jet2& a, const Jet2& b);

// Taylor jet at the origin of F = H^-1 o Gt o H, where Gt(u, v) = map(center + (u, v)) - center
// and H(r, s) = L (r, s).
struct ConjugatedJet {
    BigFloat lambda, mu;
    Jet2 f, g; // components of F; linear parts included

    unsigned order() const { return f.order(); }
};

ConjugatedJet conjugated_jet(const JetMap& map, const PlanarPoint& center, const Eigen2& e, unsigned order);
ConjugatedJet conjugated_jet(const PlanarPoint& center, const Eigen2& e, unsigned order);

// Unstable manifold y = w(x) = w_2 x^2 + ... + w_N x^N of F at the origin.
struct ManifoldJet {
    unsigned order = 0;
    std::vector<BigFloat> w; // w[k] for k = 0..order, w[0] = w[1] = 0
    BigFloat max_residual{kDefaultPrecision}; // largest coefficient of F_2(x, w) - w(F_1(x, w)) through order

    const BigFloat& coefficient(unsigned k) const { return w.at(k); }
    BigFloat eval(const BigFloat& x) const;
    BigFloat derivative(const BigFloat& x) const;
};

// Throws Error(ResonantDenominator) if some |lambda^k - mu| is negligible.
ManifoldJet unstable_jet(const ConjugatedJet& F, unsigned order);

// Coefficients of F_2(x, w(x)) - w(F_1(x, w(x))) through x^order.
Series invariance_residual(const ConjugatedJet& F, const ManifoldJet& w);

// Closed-form w_2, w_3, w_4 in terms of the jet coefficients.
std::array<BigFloat, 3> closed_form_w2_w4(const ConjugatedJet& F);

// Everything needed to work with the local unstable manifold of a saddle.
struct UnstableManifold {
    PlanarPoint center;
    Eigen2 eigen;
    ConjugatedJet F;
    ManifoldJet jet;
};

// The saddle fixed point P2 of G and its manifold through `order`.
UnstableManifold landen_unstable_manifold(Precision prec = kDefaultPrecision, unsigned order = 5,
                                          EigenNormalization norm = EigenNormalization::UnitFirstComponent);

// center + H(r, w(r))
PlanarPoint param_Wu(const BigFloat& r, const ManifoldJet& jet, const Eigen2& e, const PlanarPoint& center);
inline PlanarPoint param_Wu(const BigFloat& r, const UnstableManifold& m)
{
    return param_Wu(r, m.jet, m.eigen, m.center);
}

// w(x) - y, with (x, y) = H^-1(p - center).
BigFloat eval_D1(const PlanarPoint& p, const ManifoldJet& jet, const Eigen2& e, const PlanarPoint& center);
inline BigFloat eval_D1(const PlanarPoint& p, const UnstableManifold& m)
{
    return eval_D1(p, m.jet, m.eigen, m.center);
}

// (ab + 5a + 5b + 9)^3 - (a + b + 6)^3 (a + b + 2)^2, vanishing where G lands on the diagonal.
BigFloat eval_D2(const PlanarPoint& p);
// D2(G(p)). Throws Error(OnForbiddenLine).
BigFloat eval_D3(const PlanarPoint& p);
// ab + 5a + 5b + 9 + (a + b + 6) s^(2/3) + 2 s^(4/3), s = a + b + 2: vanishing where G lands on a + b + 2 = 0.
BigFloat eval_D4(const PlanarPoint& p);

// Parameter r with param_Wu(r) = p, by Newton on the first coordinate.
// Throws Error(NoConvergence).
BigFloat manifold_parameter(const PlanarPoint& p, const UnstableManifold& m);

} // namespace pcert
