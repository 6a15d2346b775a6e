#pragma once

#include "pcert/certify/box.hpp"
#include "pcert/certify/certificate.hpp"
#include "pcert/mpoly/mpoly.hpp"

#include <optional>
#include <vector>

namespace pcert {

// Corner bounds of p over the box after the shift x -> x + xi, which must put
// every interval strictly inside (0, inf). Throws Error(ShiftInsufficient).
BoundPair bound_on_box(const MPoly& p, const Box& box, const Rational& xi);

// Same, for a polynomial already shifted by per-axis offsets: `shifted` is
// p(x - offsets) and the box is in the original coordinates.
BoundPair bound_shifted(const MPoly& shifted, const Box& box, std::span<const Rational> offsets);

// Least integer xi >= 0 that puts every interval of the box in (0, inf).
Rational positive_shift(const Box& box);

class Discarder {
public:
    Discarder(std::vector<MPoly> system, Rational xi, int max_depth = 4);

    // First polynomial (in system order) proven sign-definite on the box, or
    // on every piece of a bisection of it. Degenerate boxes use exact values.
    std::optional<Certificate> operator()(const Box& box) const;

    const std::vector<MPoly>& system() const noexcept { return system_; }
    const Rational& xi() const noexcept { return xi_; }

private:
    std::optional<nlohmann::json> prove(const Box& box, int depth) const;
    std::optional<nlohmann::json> prove_leaf(const Box& box) const;

    std::vector<MPoly> system_;
    std::vector<MPoly> shifted_;
    std::vector<std::string> hashes_;
    Rational xi_;
    int max_depth_;
};

// Proves sign(p) == s on the box by corner bounds after a per-piece shift that
// moves each interval to [w, 2w] (w its width; points go to the least such w), bisecting
// failing pieces up to max_depth. Returns the witness tree.
std::optional<nlohmann::json> prove_sign(const MPoly& p, const Box& box, int s, int max_depth);

// Re-checks a witness tree from Discarder or prove_sign. Leaves name their
// polynomial by index into `polys` (0 when absent) and must all show sign s.
// Throws Error(ReplayFailed).
void check_sign_tree(const nlohmann::json& w, const Box& box, const std::vector<MPoly>& polys, int s);

std::optional<Certificate> discard_box(const std::vector<MPoly>& system, const Box& box, const Rational& xi);

struct SweepResult {
    std::vector<Box> survivors;
    std::vector<Certificate> certificates;
};

// All boxes axes[0][i] x axes[1][j] x ..., labelled 1-based. Results come
// back in label order whatever the worker count (0 = hardware threads).
SweepResult sweep(const std::vector<MPoly>& system, const std::vector<std::vector<Interval>>& axes, const Rational& xi,
                  unsigned workers = 0);

} // namespace pcert
