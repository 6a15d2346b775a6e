#include "pcert/landen/periodic.hpp"

#include "pcert/certify/bounds.hpp"
#include "pcert/error.hpp"
#include "pcert/mpoly/eliminate.hpp"
#include "pcert/upoly/roots.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <map>
#include <sstream>

namespace pcert {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Rational ten_to_minus(unsigned k) { return Rational(1, pow(Integer(10), k)); }

BigFloat as_float(const Interval& iv, Precision prec) { return BigFloat(prec, iv.midpoint()); }

// (a, b) from the cube-root parameters (M, R).
PlanarPoint point_from_params(const BigFloat& m, const BigFloat& r)
{
    const BigFloat b = (r * r * r + 4) / (r * r);
    return {m * m * m - b - 2, b};
}

template <class F>
auto staged(const char* stage, F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        throw Error(e.code(), std::string(stage) + ": " + e.what());
    }
}

int real_root_count(const UPoly& p, IsolationMethod method)
{
    if (p.degree() <= 0) {
        return 0;
    }
    const Rational b = root_bound(p);
    return count_roots(p, -b, b, EndpointPolicy::Exclude, method);
}

std::string decimal(const Rational& q, int digits) { return to_decimal(q, digits); }

nlohmann::json bounds_json(const PointBounds& pb)
{
    return {{"a", {to_json(pb.a.lower), to_json(pb.a.upper)}},
            {"b", {to_json(pb.b.lower), to_json(pb.b.upper)}},
            {"a_decimal", {to_decimal(pb.a.lower, 25, DecimalRounding::Down), to_decimal(pb.a.upper, 25, DecimalRounding::Up)}},
            {"b_decimal", {to_decimal(pb.b.lower, 25, DecimalRounding::Down), to_decimal(pb.b.upper, 25, DecimalRounding::Up)}}};
}

} // namespace

// ---------------------------------------------------------------- fixed points

nlohmann::json FixedPoint::to_json(int digits) const
{
    nlohmann::json j{{"name", name},
                     {"m_interval", pcert::to_json(m_interval)},
                     {"m", m.to_string(digits)},
                     {"a", a.to_string(digits)},
                     {"b", b.to_string(digits)},
                     {"trace", trace.to_string(digits)},
                     {"det", det.to_string(digits)},
                     {"lambda1", {lambda1_re.to_string(digits), lambda1_im.to_string(digits)}},
                     {"lambda2", {lambda2_re.to_string(digits), lambda2_im.to_string(digits)}},
                     {"classification", classification}};
    if (radical) {
        j["radical"] = {radical->a.to_string(digits), radical->b.to_string(digits)};
    }
    return j;
}

namespace {

std::optional<PlanarPoint> radical_form(const BigFloat& m, Precision prec)
{
    const BigFloat third = BigFloat(prec, 1L) / 3;
    if (abs(m - BigFloat(prec, 1.20557)) < BigFloat(prec, 1e-4)) {
        const BigFloat s = sqrt(BigFloat(prec, 177L));
        const BigFloat a1 = real_cbrt(172 + 12 * s);
        const BigFloat a2 = a1 * a1;
        return PlanarPoint{(3 * s - 43) / 384 * a2 - a1 / 6 - 8 * third,
                           (13 - s) / 48 * a2 + (7 + s) / 48 * a1 + 4 * third};
    }
    if (abs(m - BigFloat(prec, -1.35321)) < BigFloat(prec, 1e-4)) {
        const BigFloat s = sqrt(BigFloat(prec, 249L));
        const BigFloat b1 = real_cbrt(188 + 12 * s);
        const BigFloat b2 = b1 * b1;
        return PlanarPoint{(s - 21) / 96 * b2 + (15 - s) / 12 * b1 - 2, (17 - s) / 48 * b2 + (s - 13) / 24 * b1 - 4 * third};
    }
    return std::nullopt;
}

std::string classify(const BigFloat& trace, const BigFloat& det, const BigFloat& l1, const BigFloat& l2, bool complex)
{
    const Precision prec = trace.precision();
    const BigFloat zero_tol = pow10(prec, -static_cast<long>(prec.digits) / 4);
    if (complex) {
        return det > 1 ? "unstable focus" : "stable focus";
    }
    const BigFloat r1 = abs(l1);
    const BigFloat r2 = abs(l2);
    if (r1 < zero_tol && r2 < zero_tol) {
        return "super-attractor";
    }
    if (r1 > 1 && r2 < 1) {
        return "saddle";
    }
    return r2 > 1 ? "unstable node" : "stable node";
}

} // namespace

std::vector<FixedPoint> fixed_points(Precision prec)
{
    const UPoly d4 = fixed_point_poly();
    if (d4 != fixed_point_poly_factored()) {
        throw Error(Errc::FactorizationMismatch, "fixed-point polynomial does not match its factored form");
    }
    const RootIsolation iso = isolate_roots(d4, ten_to_minus(prec.digits + 10));
    std::vector<Interval> roots = iso.all_sorted();
    std::reverse(roots.begin(), roots.end());

    std::vector<FixedPoint> out;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const BigFloat m = as_float(roots[k], prec);
        const PlanarPoint p = point_from_params(m, m);
        const Mat2 j = jacobian_G(p);
        const BigFloat tr = j.trace();
        const BigFloat det = j.det();
        const BigFloat disc = tr * tr - 4 * det;
        const bool complex = disc < 0;
        BigFloat l1_re(prec), l1_im(prec), l2_re(prec), l2_im(prec);
        if (complex) {
            l1_re = tr / 2;
            l2_re = tr / 2;
            l1_im = sqrt(-disc) / 2;
            l2_im = -l1_im;
        } else {
            const BigFloat s = sqrt(disc);
            l1_re = (tr + s) / 2;
            l2_re = (tr - s) / 2;
            if (abs(l2_re) > abs(l1_re)) {
                std::swap(l1_re, l2_re);
            }
        }
        out.push_back(FixedPoint{"P" + std::to_string(k + 1), roots[k], m, p.a, p.b, tr, det, l1_re, l1_im, l2_re,
                                 l2_im, classify(tr, det, l1_re, l2_re, complex), radical_form(m, prec)});
    }
    return out;
}

// ---------------------------------------------------------------- period two

nlohmann::json Period2Report::to_json() const
{
    nlohmann::json cands = nlohmann::json::array();
    for (const auto& c : candidates) {
        cands.push_back({{"m", c.m_label},
                         {"n", c.n_label},
                         {"solution", c.solution},
                         {"fixed_point", c.fixed_point},
                         {"method", c.method},
                         {"certificate", c.certificate.to_json()}});
    }
    return {{"d9_degree", d9.degree()},
            {"p56_degree", p56.degree()},
            {"p56_real_roots_sturm", p56_real_roots_sturm},
            {"p56_real_roots_descartes", p56_real_roots_descartes},
            {"symmetric_resultant", symmetric_resultant},
            {"candidates", cands},
            {"no_minimal_period_two", no_minimal_period_two},
            {"seconds", seconds}};
}

Period2Report period2_nonexistence()
{
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<MPoly> sys = period2_system();
    Period2Report rep;
    rep.d9 = collapse(elim_resultant(sys[0], sys[1], "n"));
    const UPoly d9_other = collapse(elim_resultant(sys[0], sys[1], "m"));
    rep.symmetric_resultant = d9_other == -rep.d9;

    const UPoly x({0, 1});
    const UPoly one = UPoly::constant(1);
    const UPoly cubic_plus = pow(x, 3) + x * x + x + 2 * one;
    const UPoly cubic_minus = pow(x, 3) + x * x - x - 2 * one;
    const UPoly known = pow(x, 4) * (x - 2 * one) * pow(x + one, 2) * cubic_plus * cubic_minus;
    rep.p56 = divide_exact(rep.d9, known);
    if (rep.p56.degree() != 56) {
        throw Error(Errc::FactorizationMismatch,
                    "cofactor of the known factors has degree " + std::to_string(rep.p56.degree()));
    }
    rep.p56_real_roots_sturm = real_root_count(rep.p56, IsolationMethod::Sturm);
    rep.p56_real_roots_descartes = real_root_count(rep.p56, IsolationMethod::Descartes);

    // Candidates: nonzero real roots of d9, both coordinates.
    const UPoly d4 = fixed_point_poly();
    const RootIsolation iso = isolate_roots(rep.d9, ten_to_minus(40));
    std::vector<std::pair<std::string, Interval>> values;
    for (const Interval& iv : iso.all_sorted()) {
        if (iv.is_degenerate()) {
            if (iv.lo != 0) {
                values.emplace_back(to_string(iv.lo).substr(0, to_string(iv.lo).find('/')), iv);
            }
            continue;
        }
        if (count_roots_closed(cubic_minus, iv) == 1) {
            values.emplace_back("m2", iv);
        } else if (count_roots_closed(cubic_plus, iv) == 1) {
            values.emplace_back("m3", iv);
        } else {
            values.emplace_back("root@" + decimal(iv.lo, 12), iv);
        }
    }

    Box hull;
    for (const auto& v : values) {
        hull.intervals.push_back(v.second);
    }
    const Discarder discard(sys, positive_shift(hull));

    rep.no_minimal_period_two = true;
    for (const auto& [mlab, miv] : values) {
        for (const auto& [nlab, niv] : values) {
            Period2Candidate c;
            c.m_label = mlab;
            c.n_label = nlab;
            c.box = Box({miv, niv});
            if (auto cert = discard(c.box)) {
                c.method = c.box.is_degenerate() ? "exact" : "bound";
                c.certificate = *cert;
            } else if (auto id = identify_lower_period(c.box, d4)) {
                c.fixed_point = true;
                c.certificate = *id;
                if (c.box.is_degenerate()) {
                    const RationalVector pt{miv.lo, niv.lo};
                    c.solution = eval_rat(sys[0], pt) == 0 && eval_rat(sys[1], pt) == 0;
                    c.method = "exact";
                } else {
                    // m = n: the cubic holding the root divides d7(m, m) and d8(m, m).
                    const UPoly cubic = mlab == "m2" ? cubic_minus : cubic_plus;
                    const std::vector<std::string> same{"m", "m"};
                    bool divides = true;
                    for (const MPoly& f : sys) {
                        const UPoly diag = collapse(rename_cyclic(f, same));
                        divides = divides && divrem(diag, cubic).second.is_zero();
                    }
                    c.solution = divides;
                    c.method = "divisibility";
                }
            } else {
                rep.no_minimal_period_two = false;
                c.method = "undecided";
            }
            rep.candidates.push_back(std::move(c));
        }
    }
    rep.seconds = seconds_since(t0);
    return rep;
}

// ---------------------------------------------------------------- elimination

nlohmann::json EliminationChain::summary() const
{
    const auto& v = d13.variables();
    return {{"d13_degrees", {d13.degree_in(v[0]), d13.degree_in(v[1])}},
            {"d14_degrees", {d14.degree_in(v[0]), d14.degree_in(v[1])}},
            {"variables", v},
            {"d15_degree", d15.degree()},
            {"d16_degree", d16.degree()},
            {"gcd_degree", gcd.degree()},
            {"n_power", n_power},
            {"d17_degree", d17.degree()},
            {"from_cache", from_cache},
            {"seconds", seconds}};
}

EliminationChain elimination_chain(const std::vector<MPoly>& system, const DiskCache* cache)
{
    const auto t0 = std::chrono::steady_clock::now();
    EliminationChain ch;
    ch.from_cache = true;
    const std::string base = "period3-" + hex64(system.at(0).hash()) + "-";

    auto cached_mpoly = [&](const char* name, auto compute) {
        if (cache) {
            if (auto text = cache->load(base + name)) {
                try {
                    return MPoly::from_text(*text);
                } catch (const Error&) {
                }
            }
        }
        ch.from_cache = false;
        MPoly p = compute();
        if (cache) {
            cache->store(base + name, p.to_text());
        }
        return p;
    };
    auto cached_upoly = [&](const char* name, auto compute) {
        if (cache) {
            if (auto text = cache->load(base + name)) {
                try {
                    return UPoly::from_coefficient_list(*text);
                } catch (const Error&) {
                }
            }
        }
        ch.from_cache = false;
        UPoly p = compute();
        if (cache) {
            cache->store(base + name, p.to_coefficient_list());
        }
        return p;
    };

    ch.d13 = cached_mpoly("d13", [&] { return elim_resultant(system[0], system[2], "m"); });
    ch.d14 = cached_mpoly("d14", [&] { return elim_resultant(system[1], system[2], "m"); });
    ch.d15 = cached_upoly("d15", [&] { return elim_resultant_modular(ch.d13, ch.d14, "r"); });
    ch.d16 = cached_upoly("d16", [&] { return elim_resultant_modular(ch.d13, ch.d14, "n"); });
    ch.gcd = cached_upoly("gcd", [&] { return gcd_poly(ch.d15, ch.d16); });
    ch.n_power = ch.gcd.x_valuation();
    ch.d17 = ch.gcd.drop_low(ch.n_power);
    ch.seconds = seconds_since(t0);
    return ch;
}

// ---------------------------------------------------------------- localization

PointBounds point_bounds(const Interval& m, const Interval& r)
{
    if (r.contains(Rational(0))) {
        throw Error(Errc::ZeroInR, "r-interval " + to_string(r) + " contains 0");
    }
    const Rational m3lo = m.lo * m.lo * m.lo;
    const Rational m3hi = m.hi * m.hi * m.hi;
    auto inv_sq = [](const Rational& x) -> Rational { return Rational(4) / (x * x); };
    PointBounds pb;
    if (sign(r.lo) > 0) {
        pb.a = {m3lo - r.hi - 2 - inv_sq(r.lo), m3hi - r.lo - 2 - inv_sq(r.hi)};
        pb.b = {r.lo + inv_sq(r.hi), r.hi + inv_sq(r.lo)};
    } else {
        pb.a = {m3lo - r.hi - 2 - inv_sq(r.hi), m3hi - r.lo - 2 - inv_sq(r.lo)};
        pb.b = {r.lo + inv_sq(r.lo), r.hi + inv_sq(r.hi)};
    }
    return pb;
}

std::array<PointBounds, 3> orbit_bounds(const Box& box)
{
    if (box.dim() != 3) {
        throw Error(Errc::ArityMismatch, "orbit bounds need an (m, n, r) box");
    }
    const auto& iv = box.intervals;
    return {point_bounds(iv[0], iv[2]), point_bounds(iv[1], iv[0]), point_bounds(iv[2], iv[1])};
}

Box rotate_box(const Box& b)
{
    std::vector<Interval> iv(b.intervals.begin() + 1, b.intervals.end());
    iv.push_back(b.intervals.front());
    std::vector<int> lab;
    if (!b.labels.empty()) {
        lab.assign(b.labels.begin() + 1, b.labels.end());
        lab.push_back(b.labels.front());
    }
    return Box(std::move(iv), std::move(lab));
}

OrbitCheck check_orbit(const Box& box, Precision prec)
{
    const BigFloat m = as_float(box.intervals.at(0), prec);
    const BigFloat n = as_float(box.intervals.at(1), prec);
    const BigFloat r = as_float(box.intervals.at(2), prec);
    const std::array<PlanarPoint, 3> pts{point_from_params(m, r), point_from_params(n, m), point_from_params(r, n)};
    auto dist = [](const PlanarPoint& x, const PlanarPoint& y) {
        const BigFloat da = x.a - y.a;
        const BigFloat db = x.b - y.b;
        return sqrt(da * da + db * db);
    };
    BigFloat step(prec);
    BigFloat sep(prec, 1e300);
    for (int k = 0; k < 3; ++k) {
        step = max(step, dist(g_map(pts[k]), pts[(k + 1) % 3]));
        sep = min(sep, dist(pts[k], pts[(k + 1) % 3]));
    }
    const BigFloat back = dist(g_map(g_map(g_map(pts[0]))), pts[0]);
    return {back, step, sep};
}

// ---------------------------------------------------------------- period three

nlohmann::json PeriodicOrbitResult::to_json() const
{
    nlohmann::json j;
    j["period"] = period;
    j["roots"] = nlohmann::json::array();
    for (const auto& iv : roots) {
        j["roots"].push_back(pcert::to_json(iv));
    }
    j["points"] = nlohmann::json::array();
    for (std::size_t k = 0; k < parameter_boxes.size(); ++k) {
        nlohmann::json p{{"labels", label_string(parameter_boxes[k])},
                         {"parameter_box", pcert::to_json(parameter_boxes[k])},
                         {"localization_box", pcert::to_json(localization_boxes[k])},
                         {"bounds", bounds_json(coordinate_bounds[k])},
                         {"certificate", box_certificate[k]},
                         {"rotation", box_rotation[k]}};
        j["points"].push_back(std::move(p));
    }
    j["orbits"] = orbits;
    j["certificates"] = nlohmann::json::array();
    for (const auto& c : certificates) {
        j["certificates"].push_back(c.to_json());
    }
    j["report"] = report;
    return j;
}

std::string PeriodicOrbitResult::orbit_csv() const
{
    std::ostringstream out;
    out << "orbit,point,labels,a_lo,a_hi,b_lo,b_hi,a,b\n";
    for (std::size_t o = 0; o < orbits.size(); ++o) {
        for (int k = 0; k < 3; ++k) {
            const int idx = orbits[o][k];
            const PointBounds& pb = coordinate_bounds[idx];
            std::string lab = label_string(parameter_boxes[idx]);
            out << o + 1 << ',' << k + 1 << ",\"" << lab << "\"," << to_string(pb.a.lower) << ','
                << to_string(pb.a.upper) << ',' << to_string(pb.b.lower) << ',' << to_string(pb.b.upper) << ','
                << decimal(pb.a.lower, 22) << ',' << decimal(pb.b.lower, 22) << '\n';
        }
    }
    return out.str();
}

namespace {

// Non-degenerate isolating intervals first in ascending order, then the exact roots.
std::vector<Interval> labelled_roots(const RootIsolation& iso)
{
    std::vector<Interval> out = iso.intervals;
    std::sort(out.begin(), out.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    std::vector<Rational> exact = iso.exact_roots;
    std::sort(exact.begin(), exact.end());
    for (const auto& q : exact) {
        out.push_back(Interval::point(q));
    }
    return out;
}

} // namespace

PeriodicOrbitResult period3_pipeline(const Period3Options& opt)
{
    const auto t_all = std::chrono::steady_clock::now();
    PeriodicOrbitResult res;
    res.period = 3;
    nlohmann::json& rep = res.report;

    const std::vector<MPoly> system = period3_system();
    const EliminationChain chain = staged("elimination", [&] { return elimination_chain(system, opt.cache); });
    rep["elimination"] = chain.summary();

    auto t0 = std::chrono::steady_clock::now();
    const RootIsolation iso = staged("isolation", [&] { return isolate_roots(chain.d17, opt.isolation_width); });
    res.roots = labelled_roots(iso);
    rep["isolation"] = {{"roots", res.roots.size()}, {"seconds", seconds_since(t0)}};
    {
        nlohmann::json previews = nlohmann::json::array();
        for (const auto& iv : res.roots) {
            previews.push_back(decimal(iv.lo, 22));
        }
        rep["isolation"]["previews"] = previews;
    }

    // Sweep with the first polynomial only; degenerate survivors are then
    // decided exactly against the whole system.
    t0 = std::chrono::steady_clock::now();
    const std::vector<std::vector<Interval>> axes(3, res.roots);
    SweepResult sw = staged("sweep", [&] { return sweep({system[0]}, axes, opt.xi, opt.workers); });
    const std::size_t total = res.roots.size() * res.roots.size() * res.roots.size();
    nlohmann::json surv = nlohmann::json::array();
    for (const auto& b : sw.survivors) {
        surv.push_back(label_string(b));
    }
    rep["sweep"] = {{"boxes", total},
                    {"discarded", sw.certificates.size()},
                    {"survivors", surv},
                    {"xi", to_string(opt.xi)},
                    {"seconds", seconds_since(t0)}};
    res.certificates = std::move(sw.certificates);

    const Discarder exact_check(system, opt.xi);
    const UPoly d4 = fixed_point_poly();
    std::vector<Box> candidates;
    nlohmann::json degenerate = nlohmann::json::array();
    nlohmann::json identified = nlohmann::json::array();
    for (const Box& b : sw.survivors) {
        if (b.is_degenerate()) {
            if (auto c = exact_check(b)) {
                degenerate.push_back({{"labels", label_string(b)}, {"witness", c->witness}});
                res.certificates.push_back(*c);
                continue;
            }
        }
        if (auto id = identify_lower_period(b, d4)) {
            identified.push_back(label_string(b));
            res.certificates.push_back(*id);
            continue;
        }
        candidates.push_back(b);
    }
    rep["degenerate_discards"] = degenerate;
    rep["identified"] = identified;

    // Cyclic classes; the lexicographically least labelling represents each.
    std::vector<std::array<Box, 3>> classes;
    {
        std::vector<bool> used(candidates.size(), false);
        auto find = [&](const Box& b) {
            for (std::size_t k = 0; k < candidates.size(); ++k) {
                if (candidates[k].labels == b.labels) {
                    return static_cast<int>(k);
                }
            }
            return -1;
        };
        for (std::size_t k = 0; k < candidates.size(); ++k) {
            if (used[k]) {
                continue;
            }
            std::array<Box, 3> cls{candidates[k], rotate_box(candidates[k]), rotate_box(rotate_box(candidates[k]))};
            for (const Box& b : cls) {
                const int at = find(b);
                if (at < 0) {
                    throw Error(Errc::StageFailed,
                                "rotation: " + label_string(b) + " is not a survivor but " + label_string(cls[0]) + " is");
                }
                used[at] = true;
            }
            std::rotate(cls.begin(), std::min_element(cls.begin(), cls.end(), [](const Box& x, const Box& y) {
                                         return x.labels < y.labels;
                                     }),
                        cls.end());
            classes.push_back(cls);
        }
    }

    t0 = std::chrono::steady_clock::now();
    auto certify_one = [&](const Box& b) {
        return staged(("miranda " + label_string(b)).c_str(), [&] {
            const Preconditioned pre = precondition(system, b);
            return miranda_certify(pre, b, opt.miranda);
        });
    };
    std::vector<Certificate> miranda;
    if (opt.workers == 1) {
        for (const auto& cls : classes) {
            miranda.push_back(certify_one(cls[0]));
        }
    } else {
        std::vector<std::future<Certificate>> jobs;
        for (const auto& cls : classes) {
            jobs.push_back(std::async(std::launch::async, certify_one, cls[0]));
        }
        for (auto& j : jobs) {
            miranda.push_back(j.get());
        }
    }
    nlohmann::json mir = nlohmann::json::array();
    for (const auto& c : miranda) {
        nlohmann::json methods = nlohmann::json::array();
        for (const auto& comp : c.witness.at("components")) {
            methods.push_back(comp.at("method"));
        }
        mir.push_back({{"labels", label_string(c.box)}, {"methods", methods}});
    }
    rep["miranda"] = {{"certified", mir}, {"seconds", seconds_since(t0)}};

    // Refined roots for the analytic localization and the numeric orbit check.
    const UPoly sqf = squarefree_part(chain.d17);
    std::map<int, Interval> fine;
    std::map<int, Interval> finest;
    auto refined = [&](std::map<int, Interval>& memo, const Box& b, const Rational& w) {
        std::vector<Interval> iv;
        for (std::size_t k = 0; k < b.dim(); ++k) {
            const int l = b.labels[k];
            auto it = memo.find(l);
            if (it == memo.end()) {
                const Interval& src = b.intervals[k];
                it = memo.emplace(l, src.is_degenerate() ? src : refine_root(sqf, src, w)).first;
            }
            iv.push_back(it->second);
        }
        return Box(std::move(iv), b.labels);
    };

    nlohmann::json checks = nlohmann::json::array();
    for (std::size_t o = 0; o < classes.size(); ++o) {
        const int cert_index = static_cast<int>(res.certificates.size());
        res.certificates.push_back(miranda[o]);
        std::array<int, 3> orbit{};
        for (int k = 0; k < 3; ++k) {
            const Box& b = classes[o][k];
            orbit[k] = static_cast<int>(res.parameter_boxes.size());
            res.parameter_boxes.push_back(b);
            const Box loc = refined(fine, b, opt.localization_width);
            res.localization_boxes.push_back(loc);
            res.coordinate_bounds.push_back(orbit_bounds(loc)[0]);
            res.box_certificate.push_back(cert_index);
            res.box_rotation.push_back(k);
        }
        res.orbits.push_back(orbit);
        const OrbitCheck chk = check_orbit(refined(finest, classes[o][0], ten_to_minus(45)));
        checks.push_back({{"labels", label_string(classes[o][0])},
                          {"return_defect", chk.return_defect.to_string(6)},
                          {"step_defect", chk.step_defect.to_string(6)},
                          {"min_separation", chk.min_separation.to_string(6)}});
    }
    rep["orbit_checks"] = checks;
    rep["seconds"] = seconds_since(t_all);
    return res;
}

} // namespace pcert
