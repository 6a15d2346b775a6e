#include "pcert/certify/miranda.hpp"

#include "pcert/certify/bounds.hpp"
#include "pcert/error.hpp"
#include "pcert/mpoly/eliminate.hpp"
#include "pcert/upoly/roots.hpp"

#include <algorithm>

namespace pcert {

namespace {

Rational intervals_lo(const Box& box)
{
    Rational lo = box.intervals.at(0).lo;
    for (const auto& iv : box.intervals) {
        lo = std::max(lo, iv.lo);
    }
    return lo;
}

Rational intervals_hi(const Box& box)
{
    Rational hi = box.intervals.at(0).hi;
    for (const auto& iv : box.intervals) {
        hi = std::min(hi, iv.hi);
    }
    return hi;
}

Box face(const Box& box, std::size_t i, bool upper)
{
    Box f = box;
    const Rational e = upper ? box.intervals[i].hi : box.intervals[i].lo;
    f.intervals[i] = Interval::point(e);
    return f;
}

void hypothesis_failed(const std::string& what) { throw Error(Errc::HypothesisFailed, what); }

nlohmann::json vec_json(const RationalVector& v)
{
    nlohmann::json j = nlohmann::json::array();
    for (const auto& q : v) {
        j.push_back(to_json(q));
    }
    return j;
}

RationalVector vec_from_json(const nlohmann::json& j)
{
    RationalVector v;
    for (const auto& q : j) {
        v.push_back(rational_from_json(q));
    }
    return v;
}

struct FaceProof {
    nlohmann::json witness;
    bool ok = false;
};

// Both faces of component i, zeros2 on the product family when the box is
// three-dimensional.
FaceProof faces_by_zeros2(const MPoly& gi, const Box& box, std::size_t i, int s_lo)
{
    FaceProof out;
    std::vector<std::size_t> rest;
    for (std::size_t k = 0; k < box.dim(); ++k) {
        if (k != i) {
            rest.push_back(k);
        }
    }
    const MPoly lo = specialize(gi, i, box.intervals[i].lo);
    const MPoly hi = specialize(gi, i, box.intervals[i].hi);
    const std::string alpha = lo.variables()[0];
    const std::string x = lo.variables()[1];
    const Interval& lambda = box.intervals[rest[0]];
    const Interval& j = box.intervals[rest[1]];
    try {
        const Zeros2Report rep = zeros2_no_roots_product(lo, hi, alpha, x, lambda, j, lambda.midpoint());
        out.witness = {{"method", "zeros2"},      {"alpha", alpha},  {"x", x}, {"alpha0", to_json(lambda.midpoint())},
                       {"report", rep.to_json()}, {"sign_lo", s_lo}};
        out.ok = true;
    } catch (const Error& e) {
        if (e.code() != Errc::HypothesisFailed) {
            throw;
        }
        out.witness = {{"zeros2_failure", e.what()}};
    }
    return out;
}

FaceProof faces_by_bounds(const MPoly& gi, const Box& box, std::size_t i, int s_lo, int depth)
{
    FaceProof out;
    auto lo = prove_sign(gi, face(box, i, false), s_lo, depth);
    if (!lo) {
        out.witness = {{"bound_failure", "lower face"}};
        return out;
    }
    auto hi = prove_sign(gi, face(box, i, true), -s_lo, depth);
    if (!hi) {
        out.witness = {{"bound_failure", "upper face"}};
        return out;
    }
    out.witness = {{"method", "bound"}, {"sign_lo", s_lo}, {"lower_face", std::move(*lo)}, {"upper_face", std::move(*hi)}};
    out.ok = true;
    return out;
}

void check_zeros2_witness(const MPoly& gi, const Box& box, std::size_t i, const nlohmann::json& w)
{
    const MPoly lo = specialize(gi, i, box.intervals[i].lo);
    const MPoly hi = specialize(gi, i, box.intervals[i].hi);
    const auto& vars = lo.variables();
    std::size_t k0 = 0;
    std::size_t k1 = 0;
    for (std::size_t k = 0, seen = 0; k < box.dim(); ++k) {
        if (k == i) {
            continue;
        }
        (seen++ == 0 ? k0 : k1) = k;
    }
    if (w.at("alpha").get<std::string>() != vars[0] || w.at("x").get<std::string>() != vars[1]) {
        throw Error(Errc::ReplayFailed, "zeros2 witness variable roles differ");
    }
    const Rational alpha0 = rational_from_json(w.at("alpha0"));
    try {
        const Zeros2Report rep = zeros2_no_roots_product(lo, hi, vars[0], vars[1], box.intervals[k0],
                                                         box.intervals[k1], alpha0);
        if (rep.to_json() != w.at("report")) {
            throw Error(Errc::ReplayFailed, "zeros2 report differs on replay");
        }
    } catch (const Error& e) {
        if (e.code() == Errc::ReplayFailed) {
            throw;
        }
        throw Error(Errc::ReplayFailed, std::string("zeros2 replay: ") + e.what());
    }
}

} // namespace

int count_roots_closed(const UPoly& p, const Interval& iv, IsolationMethod method)
{
    if (p.is_zero()) {
        throw Error(Errc::ZeroPolynomial, "root count of the zero polynomial");
    }
    if (iv.is_degenerate()) {
        return p.eval(iv.lo) == 0 ? 1 : 0;
    }
    int n = count_roots(p, iv.lo, iv.hi, EndpointPolicy::Exclude, method);
    n += p.eval(iv.lo) == 0 ? 1 : 0;
    n += p.eval(iv.hi) == 0 ? 1 : 0;
    return n;
}

std::optional<Certificate> identify_lower_period(const Box& box, const UPoly& fixed_poly)
{
    if (box.dim() == 0) {
        return std::nullopt;
    }
    const Rational lo = intervals_lo(box);
    const Rational hi = intervals_hi(box);
    if (lo > hi) {
        return std::nullopt;
    }
    for (const auto& iv : box.intervals) {
        if (count_roots_closed(fixed_poly, iv) != 1) {
            return std::nullopt;
        }
    }
    const Interval common(lo, hi);
    if (count_roots_closed(fixed_poly, common) != 1) {
        return std::nullopt;
    }
    Certificate c;
    c.kind = CertKind::IdentifiedLowerPeriod;
    c.box = box;
    c.witness = {{"fixed_poly", fixed_poly.to_coefficient_list()},
                 {"fixed_poly_hash", hex64(fixed_poly.hash())},
                 {"common", to_json(common)}};
    return c;
}

void replay_identification(const Certificate& c)
{
    const UPoly p = UPoly::from_coefficient_list(c.witness.at("fixed_poly").get<std::string>());
    if (hex64(p.hash()) != c.witness.at("fixed_poly_hash").get<std::string>()) {
        throw Error(Errc::ReplayFailed, "fixed-point polynomial hash mismatch");
    }
    auto again = identify_lower_period(c.box, p);
    if (!again || again->witness != c.witness) {
        throw Error(Errc::ReplayFailed, "lower-period identification does not reproduce for " + label_string(c.box));
    }
}

Preconditioned precondition_at(const std::vector<MPoly>& system, const RationalVector& center)
{
    const std::size_t n = system.size();
    if (center.size() != n) {
        throw Error(Errc::ArityMismatch, "preconditioning needs a square system");
    }
    RatMatrix jac(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (system[r].nvars() != n) {
            throw Error(Errc::ArityMismatch, "preconditioning needs a square system");
        }
        for (std::size_t k = 0; k < n; ++k) {
            jac(r, k) = eval_rat(partial(system[r], k), center);
        }
    }
    Preconditioned out;
    out.f = system;
    out.center = center;
    try {
        out.a = invert_exact(jac);
    } catch (const Error& e) {
        if (e.code() == Errc::SingularMatrix) {
            throw Error(Errc::SingularJacobian, "Jacobian is singular at the box center");
        }
        throw;
    }
    for (std::size_t r = 0; r < n; ++r) {
        MPoly gi(system[r].variables());
        for (std::size_t k = 0; k < n; ++k) {
            if (sign(out.a(r, k)) != 0) {
                gi += out.a(r, k) * system[k];
            }
        }
        out.g.push_back(std::move(gi));
    }
    return out;
}

Preconditioned precondition(const std::vector<MPoly>& system, const Box& box)
{
    return precondition_at(system, box.midpoint());
}

nlohmann::json Zeros2Report::to_json() const
{
    return {{"alpha", alpha},
            {"x", x},
            {"specialization_roots", specialization_roots},
            {"endpoint_roots", endpoint_roots},
            {"discriminant_degree", discriminant_degree},
            {"discriminant_roots", discriminant_roots}};
}

namespace {

constexpr auto kDescartes = IsolationMethod::Descartes;

int real_roots(const UPoly& p)
{
    if (p.degree() <= 0) {
        return 0;
    }
    const Rational b = root_bound(p);
    return count_roots(p, -b, b, EndpointPolicy::Exclude, kDescartes);
}

UPoly discriminant_or_one(const MPoly& f, const std::string& x)
{
    return f.degree_in(x) >= 2 ? elim_discriminant(f, x) : UPoly::constant(1);
}

// Distinct real roots and degree of disc(f g) = disc(f) disc(g) Res(f, g)^2,
// after checking that no factor vanishes on lambda.
std::pair<int, int> discriminant_of_product(const MPoly& f, const MPoly& g, const std::string& x, const Interval& lambda)
{
    const UPoly df = discriminant_or_one(f, x);
    const UPoly dg = discriminant_or_one(g, x);
    const UPoly res = elim_resultant_modular(f, g, x);
    for (const UPoly* q : {&df, &dg, &res}) {
        if (q->is_zero()) {
            hypothesis_failed("(ii): the discriminant vanishes identically (repeated factor)");
        }
        if (count_roots_closed(*q, lambda, kDescartes) != 0) {
            hypothesis_failed("(ii): the discriminant has a root in Lambda");
        }
    }
    const int degree = df.degree() + dg.degree() + 2 * res.degree();
    auto common = [](const UPoly& a, const UPoly& b) {
        return a.degree() <= 0 || b.degree() <= 0 ? UPoly::constant(1) : gcd_poly(a, b);
    };
    const UPoly fg = common(df, dg);
    const UPoly fr = common(df, res);
    const UPoly gr = common(dg, res);
    const UPoly all = common(fg, res);
    const int roots = real_roots(df) + real_roots(dg) + real_roots(res) - real_roots(fg) - real_roots(fr) -
                      real_roots(gr) + real_roots(all);
    return {degree, roots};
}

Zeros2Report zeros2_impl(const MPoly& family, const std::vector<MPoly>& factors, const std::string& alpha,
                         const std::string& x, const Interval& lambda, const Interval& j, const Rational& alpha0)
{
    if (family.is_zero()) {
        hypothesis_failed("zeros2 family is the zero polynomial");
    }
    if (!lambda.contains(alpha0)) {
        hypothesis_failed("alpha0 is outside the parameter interval");
    }
    Zeros2Report rep;
    rep.alpha = alpha;
    rep.x = x;
    const std::size_t xi = family.index_of(x);
    const auto& vars = family.variables();
    const bool has_alpha = std::find(vars.begin(), vars.end(), alpha) != vars.end() && family.degree_in(alpha) > 0;
    for (std::size_t k = 0; k < family.nvars(); ++k) {
        if (k != xi && family.degree_in(k) > 0 && vars[k] != alpha) {
            throw Error(Errc::NotUnivariate, "zeros2 family uses a variable other than '" + alpha + "' and '" + x + "'");
        }
    }

    // (i) one member has no root in J
    MPoly member = family;
    if (has_alpha) {
        member = specialize(family, family.index_of(alpha), alpha0);
    }
    const UPoly g0 = collapse(member);
    if (g0.is_zero()) {
        hypothesis_failed("(i): the specialization at alpha0 vanishes identically");
    }
    rep.specialization_roots = real_roots(g0);
    if (count_roots_closed(g0, j, kDescartes) != 0) {
        hypothesis_failed("(i): the specialization at alpha0 has a root in J");
    }
    if (!has_alpha) {
        return rep;
    }

    // (ii) no root enters J through its ends or by collision
    const UPoly at_lo = collapse(specialize(family, xi, j.lo));
    const UPoly at_hi = collapse(specialize(family, xi, j.hi));
    const UPoly ends = at_lo * at_hi;
    if (ends.is_zero()) {
        hypothesis_failed("(ii): an end of J is a root for every alpha");
    }
    rep.endpoint_roots = real_roots(ends);
    if (count_roots_closed(ends, lambda, kDescartes) != 0) {
        hypothesis_failed("(ii): the endpoint product has a root in Lambda");
    }
    const int dx = family.degree_in(xi);
    if (dx < 2) {
        return rep;
    }
    const bool split = factors.size() == 2 && factors[0].degree_in(x) >= 1 && factors[1].degree_in(x) >= 1;
    if (split) {
        std::tie(rep.discriminant_degree, rep.discriminant_roots) =
            discriminant_of_product(factors[0], factors[1], x, lambda);
        return rep;
    }
    const UPoly disc = elim_discriminant(family, x);
    if (disc.is_zero()) {
        hypothesis_failed("(ii): the discriminant vanishes identically (repeated factor)");
    }
    rep.discriminant_degree = disc.degree();
    rep.discriminant_roots = real_roots(disc);
    if (count_roots_closed(disc, lambda, kDescartes) != 0) {
        hypothesis_failed("(ii): the discriminant has a root in Lambda");
    }
    return rep;
}

} // namespace

Zeros2Report zeros2_no_roots(const MPoly& family, const std::string& alpha, const std::string& x, const Interval& lambda,
                             const Interval& j, const Rational& alpha0)
{
    return zeros2_impl(family, {}, alpha, x, lambda, j, alpha0);
}

Zeros2Report zeros2_no_roots_product(const MPoly& f, const MPoly& g, const std::string& alpha, const std::string& x,
                                     const Interval& lambda, const Interval& j, const Rational& alpha0)
{
    return zeros2_impl(f * g, {f, g}, alpha, x, lambda, j, alpha0);
}

Certificate miranda_certify(const std::vector<MPoly>& g, const Box& box, const MirandaOptions& opt)
{
    Preconditioned p;
    p.f = g;
    p.g = g;
    return miranda_certify(p, box, opt);
}

Certificate miranda_certify(const Preconditioned& pre, const Box& box, const MirandaOptions& opt)
{
    const std::size_t n = box.dim();
    if (pre.g.size() != n) {
        throw Error(Errc::ArityMismatch, "Miranda needs as many functions as box dimensions");
    }
    nlohmann::json comps = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        const MPoly& gi = pre.g[i];
        const RationalVector mid_lo = face(box, i, false).midpoint();
        const RationalVector mid_hi = face(box, i, true).midpoint();
        const int s_lo = sign(eval_rat(gi, mid_lo));
        const int s_hi = sign(eval_rat(gi, mid_hi));
        const std::string var = gi.variables()[i];
        if (s_lo == 0 || s_hi != -s_lo) {
            throw Error(Errc::FaceSignUndetermined, "component " + std::to_string(i + 1) + ": face centers of '" + var +
                                                        "' show signs " + std::to_string(s_lo) + " and " +
                                                        std::to_string(s_hi));
        }
        FaceProof proof;
        nlohmann::json attempts = nlohmann::json::array();
        if (opt.use_zeros2 && n == 3) {
            proof = faces_by_zeros2(gi, box, i, s_lo);
            if (!proof.ok) {
                attempts.push_back(proof.witness);
            }
        }
        if (!proof.ok) {
            proof = faces_by_bounds(gi, box, i, s_lo, opt.bound_depth);
        }
        if (!proof.ok) {
            attempts.push_back(proof.witness);
            throw Error(Errc::FaceSignUndetermined, "component " + std::to_string(i + 1) + " on the faces of '" + var +
                                                        "': " + attempts.dump());
        }
        proof.witness["component"] = i;
        proof.witness["face_variable"] = var;
        proof.witness["hash"] = poly_hash(gi);
        if (!attempts.empty()) {
            proof.witness["fallback_from"] = attempts;
        }
        comps.push_back(std::move(proof.witness));
    }
    Certificate c;
    c.kind = CertKind::MirandaCertified;
    c.box = box;
    c.witness = {{"preconditioned", pre.a.rows() > 0}, {"components", std::move(comps)}};
    if (pre.a.rows() > 0) {
        c.witness["center"] = vec_json(pre.center);
    }
    return c;
}

void replay_miranda(const Certificate& c, const std::vector<MPoly>& system)
{
    std::vector<MPoly> g = system;
    if (c.witness.at("preconditioned").get<bool>()) {
        g = precondition_at(system, vec_from_json(c.witness.at("center"))).g;
    }
    const auto& comps = c.witness.at("components");
    if (comps.size() != c.box.dim() || g.size() != c.box.dim()) {
        throw Error(Errc::ReplayFailed, "Miranda witness does not cover every component");
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const auto& w = comps[i];
        if (w.at("component").get<std::size_t>() != i || w.at("hash").get<std::string>() != poly_hash(g[i])) {
            throw Error(Errc::ReplayFailed, "component " + std::to_string(i + 1) + " does not match the system");
        }
        const int s_lo = w.at("sign_lo").get<int>();
        if (sign(eval_rat(g[i], face(c.box, i, false).midpoint())) != s_lo ||
            sign(eval_rat(g[i], face(c.box, i, true).midpoint())) != -s_lo || s_lo == 0) {
            throw Error(Errc::ReplayFailed, "face-center signs differ for component " + std::to_string(i + 1));
        }
        const std::string method = w.at("method").get<std::string>();
        if (method == "zeros2") {
            check_zeros2_witness(g[i], c.box, i, w);
        } else if (method == "bound") {
            const std::vector<MPoly> one{g[i]};
            check_sign_tree(w.at("lower_face"), face(c.box, i, false), one, s_lo);
            check_sign_tree(w.at("upper_face"), face(c.box, i, true), one, -s_lo);
        } else {
            throw Error(Errc::ReplayFailed, "unknown face method '" + method + "'");
        }
    }
}

} // namespace pcert
