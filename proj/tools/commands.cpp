#include "commands.hpp"

#include "pcert/certify/box.hpp"
#include "pcert/landen/curve.hpp"
#include "pcert/landen/map.hpp"
#include "pcert/landen/periodic.hpp"
#include "pcert/manifold/homoclinic.hpp"
#include "pcert/mpoly/cache.hpp"

#include <chrono>
#include <iomanip>
#include <random>
#include <sstream>
#include <thread>

namespace pcert::cli {

namespace {

int out_digits(const RunConfig& cfg) { return static_cast<int>(cfg.precision_digits) - 5; }

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string norm_name(EigenNormalization n) { return n == EigenNormalization::UnitNorm ? "unit-norm" : "unit-first"; }

nlohmann::json config_json(const RunConfig& cfg)
{
    nlohmann::json j{{"precision", cfg.precision_digits}};
    if (cfg.command == "period") {
        j["period"] = cfg.period;
        if (cfg.period == 3) {
            j["isolation_width"] = to_json(cfg.isolation_width);
            j["xi"] = to_json(cfg.shift_xi);
        }
    } else if (cfg.command == "manifold" || cfg.command == "homoclinic") {
        j["order"] = cfg.order;
        j["normalization"] = norm_name(cfg.normalization);
    } else if (cfg.command == "integral-check") {
        j["samples"] = cfg.integral_samples;
        j["tol"] = cfg.integral_tol;
        j["seed"] = cfg.seed;
    } else if (cfg.command == "classify") {
        j["a"] = cfg.a;
        j["b"] = cfg.b;
        j["iterations"] = cfg.iterations;
    }
    return j;
}

Output fixed_points_cmd(const RunConfig& cfg)
{
    const auto pts = fixed_points(Precision{cfg.precision_digits});
    Output out;
    nlohmann::json arr = nlohmann::json::array();
    std::ostringstream csv;
    std::ostringstream text;
    csv << "name,m_lo,m_hi,a,b,trace,det,classification\n";
    for (const auto& p : pts) {
        arr.push_back(p.to_json(out_digits(cfg)));
        csv << p.name << ',' << to_string(p.m_interval.lo) << ',' << to_string(p.m_interval.hi) << ','
            << p.a.to_string(out_digits(cfg)) << ',' << p.b.to_string(out_digits(cfg)) << ','
            << p.trace.to_string(out_digits(cfg)) << ',' << p.det.to_string(out_digits(cfg)) << ",\""
            << p.classification << "\"\n";
        text << p.name << "  a = " << p.a.to_string(20) << "  b = " << p.b.to_string(20) << "  " << p.classification
             << '\n';
    }
    out.json = {{"fixed_points", arr}};
    out.csv = csv.str();
    out.text = text.str();
    return out;
}

Output period2_cmd()
{
    const Period2Report rep = period2_nonexistence();
    Output out;
    out.json = rep.to_json();
    std::ostringstream csv;
    std::ostringstream text;
    csv << "m,n,solution,fixed_point,method\n";
    int solutions = 0;
    for (const auto& c : rep.candidates) {
        csv << c.m_label << ',' << c.n_label << ',' << c.solution << ',' << c.fixed_point << ',' << c.method << '\n';
        solutions += c.solution ? 1 : 0;
    }
    text << "d9 degree " << rep.d9.degree() << ", degree-56 factor has " << rep.p56_real_roots_sturm
         << " real roots (Sturm), " << rep.p56_real_roots_descartes << " (Descartes)\n";
    text << rep.candidates.size() << " candidate pairs, " << solutions << " solutions, all on the diagonal\n";
    text << (rep.no_minimal_period_two ? "no minimal period-2 points\n" : "period-2 points not excluded\n");
    out.csv = csv.str();
    out.text = text.str();
    return out;
}

std::string rounded(const BoundPair& bp)
{
    return BigFloat(Precision{40}, (bp.lower + bp.upper) / 2).to_string(20);
}

Output period3_cmd(const RunConfig& cfg)
{
    std::optional<DiskCache> cache;
    if (cfg.use_cache) {
        cache.emplace(cfg.cache_dir);
    }
    Period3Options opt;
    opt.cache = cache ? &*cache : nullptr;
    opt.workers = cfg.workers;
    opt.xi = cfg.shift_xi;
    opt.isolation_width = cfg.isolation_width;
    const PeriodicOrbitResult res = period3_pipeline(opt);
    Output out;
    out.json = res.to_json();
    out.csv = res.orbit_csv();
    std::ostringstream text;
    text << res.parameter_boxes.size() << " points of minimal period 3 in " << res.orbits.size() << " orbits\n";
    for (std::size_t o = 0; o < res.orbits.size(); ++o) {
        text << "orbit " << o + 1 << '\n';
        for (int idx : res.orbits[o]) {
            const PointBounds& pb = res.coordinate_bounds[idx];
            text << "  " << std::left << std::setw(12) << label_string(res.parameter_boxes[idx]) << "  a = "
                 << rounded(pb.a) << "  b = " << rounded(pb.b) << '\n';
        }
    }
    out.text = text.str();
    return out;
}

Output manifold_cmd(const RunConfig& cfg)
{
    const Precision prec{cfg.precision_digits};
    const UnstableManifold m = landen_unstable_manifold(prec, cfg.order, cfg.normalization);
    const int d = out_digits(cfg);
    Output out;
    nlohmann::json w = nlohmann::json::object();
    std::ostringstream text;
    text << "lambda1 = " << m.eigen.lambda1.to_string(20) << "  lambda2 = " << m.eigen.lambda2.to_string(20) << '\n';
    for (unsigned k = 2; k <= cfg.order; ++k) {
        w["w" + std::to_string(k)] = m.jet.coefficient(k).to_string(d);
        text << 'w' << k << " = " << m.jet.coefficient(k).to_string(32) << '\n';
    }
    const auto& L = m.eigen.L;
    out.json = {{"center", nlohmann::json::array({m.center.a.to_string(d), m.center.b.to_string(d)})},
                {"lambda1", m.eigen.lambda1.to_string(d)},
                {"lambda2", m.eigen.lambda2.to_string(d)},
                {"L",
                 nlohmann::json::array({nlohmann::json::array({L.m11.to_string(d), L.m12.to_string(d)}),
                                        nlohmann::json::array({L.m21.to_string(d), L.m22.to_string(d)})})},
                {"w", w},
                {"invariance_residual", m.jet.max_residual.to_string(6)}};
    out.text = text.str();

    std::ostringstream csv;
    if (cfg.curve == "zero-grid") {
        csv << "a,b,D3,D4\n";
        for (int i = 0; i < cfg.grid; ++i) {
            for (int j = 0; j < cfg.grid; ++j) {
                const BigFloat a = BigFloat(prec, -8.0) + BigFloat(prec, 4.0) * i / std::max(1, cfg.grid - 1);
                const BigFloat b = BigFloat(prec, 3.5) + BigFloat(prec, 1.5) * j / std::max(1, cfg.grid - 1);
                const PlanarPoint p{a, b};
                csv << a.to_string(12) << ',' << b.to_string(12) << ',';
                try {
                    csv << eval_D3(p).to_string(12);
                } catch (const Error&) {
                    csv << "nan";
                }
                csv << ',' << eval_D4(p).to_string(12) << '\n';
            }
        }
    } else {
        csv << "r,a,b\n";
        for (const auto& row : sample_manifold(m, BigFloat(prec, cfg.r_min), BigFloat(prec, cfg.r_max), cfg.samples)) {
            csv << row[0].to_string(12) << ',' << row[1].to_string(20) << ',' << row[2].to_string(20) << '\n';
        }
    }
    out.csv = csv.str();
    return out;
}

Output homoclinic_cmd(const RunConfig& cfg)
{
    const HomoclinicReport rep = homoclinic_report(Precision{cfg.precision_digits}, cfg.order, cfg.normalization);
    const int d = out_digits(cfg);
    Output out;
    out.json = rep.to_json(d);
    std::ostringstream csv;
    std::ostringstream text;
    csv << "name,system,a,b,r,residual\n";
    for (const auto& p : rep.points) {
        csv << p.name << ",\"" << p.system << "\"," << p.point.a.to_string(d) << ',' << p.point.b.to_string(d) << ','
            << p.r.to_string(d) << ',' << p.residual.to_string(6) << '\n';
        text << std::left << std::setw(5) << p.name << " a = " << p.point.a.to_string(30)
             << "  b = " << p.point.b.to_string(30) << "  r = " << p.r.to_string(20) << '\n';
    }
    text << "|R(G^3(P))| = " << rep.resolvent_G3P.to_string(6) << '\n';
    text << "parameters interleaved: " << (rep.interleaved ? "yes" : "no") << '\n';
    out.csv = csv.str();
    out.text = text.str();
    return out;
}

Output integral_check_cmd(const RunConfig& cfg)
{
    const Precision prec{cfg.precision_digits};
    const BigFloat tol(prec, cfg.integral_tol);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> ab(-2.0, 6.0);
    std::uniform_real_distribution<double> cde(-2.0, 2.0);
    Output out;
    nlohmann::json rows = nlohmann::json::array();
    std::ostringstream csv;
    csv << "a,b,c,d,e,I,I_step,defect\n";
    BigFloat worst(prec, 0L);
    int drawn = 0;
    while (static_cast<int>(rows.size()) < cfg.integral_samples) {
        if (++drawn > 1000 * std::max(1, cfg.integral_samples)) {
            throw Error(Errc::NoConvergence, "could not draw states in the convergence region");
        }
        const LandenState5 s{BigFloat(prec, ab(rng)), BigFloat(prec, ab(rng)), BigFloat(prec, cde(rng)),
                             BigFloat(prec, cde(rng)), BigFloat(prec, cde(rng))};
        // Keep clear of the boundary, where the quadrature is needlessly slow.
        if (!integral_converges(s.a, s.b) || abs(s.a + s.b + 2) < BigFloat(prec, 0.5) ||
            ((s.a.sign() < 0 || s.b.sign() < 0) && resolvent(s.a, s.b) < BigFloat(prec, 1.0))) {
            continue;
        }
        const LandenState5 t = landen5_step(s);
        const BigFloat i0 = integral_I(s, tol);
        const BigFloat i1 = integral_I(t, tol);
        const BigFloat defect = abs(i1 - i0);
        worst = max(worst, defect);
        rows.push_back({{"state", {s.a.to_string(17), s.b.to_string(17), s.c.to_string(17), s.d.to_string(17),
                                   s.e.to_string(17)}},
                        {"I", i0.to_string(15)},
                        {"I_step", i1.to_string(15)},
                        {"defect", defect.to_string(3)}});
        csv << s.a.to_string(17) << ',' << s.b.to_string(17) << ',' << s.c.to_string(17) << ',' << s.d.to_string(17)
            << ',' << s.e.to_string(17) << ',' << i0.to_string(15) << ',' << i1.to_string(15) << ','
            << defect.to_string(3) << '\n';
    }
    // Closed form at the super-attracting point.
    const LandenState5 fixed{BigFloat(prec, 3L), BigFloat(prec, 3L), BigFloat(prec, 1L), BigFloat(prec, 2L),
                             BigFloat(prec, -1L)};
    const BigFloat closed = (3 * fixed.c + fixed.d + 3 * fixed.e) * pi(prec) / 16;
    const BigFloat closed_err = abs(integral_I(fixed, tol) - closed);
    const bool pass = worst < 10 * tol && closed_err < 10 * tol;
    out.json = {{"samples", rows},
                {"max_defect", worst.to_string(3)},
                {"closed_form_error", closed_err.to_string(3)},
                {"passed", pass}};
    out.csv = csv.str();
    std::ostringstream text;
    text << rows.size() << " states, max |I(step(s)) - I(s)| = " << worst.to_string(3) << '\n';
    text << "I(3,3,c,d,e) - (3c+d+3e)pi/16 at (1,2,-1): " << closed_err.to_string(3) << '\n';
    text << (pass ? "invariance holds within 10 tol\n" : "invariance defect exceeds 10 tol\n");
    out.text = text.str();
    return out;
}

Output classify_cmd(const RunConfig& cfg)
{
    const Precision prec{cfg.precision_digits};
    const PlanarPoint p{BigFloat(prec, cfg.a), BigFloat(prec, cfg.b)};
    const StableSetClass c = classify_stable_set(p, cfg.iterations);
    Output out;
    out.json = {{"a", cfg.a}, {"b", cfg.b}, {"class", c.to_string()}, {"steps", c.steps}};
    out.csv = "a,b,class,steps\n" + cfg.a + ',' + cfg.b + ',' + c.to_string() + ',' + std::to_string(c.steps) + '\n';
    out.text = c.to_string() + '\n';
    return out;
}

Output cache_cmd(const RunConfig& cfg)
{
    const DiskCache cache(cfg.cache_dir);
    Output out;
    std::ostringstream text;
    std::ostringstream csv;
    if (cfg.subcommand == "clear") {
        const std::size_t n = cache.clear();
        out.json = {{"dir", cfg.cache_dir.string()}, {"removed", n}};
        text << "removed " << n << " entries from " << cfg.cache_dir.string() << '\n';
        csv << "removed\n" << n << '\n';
    } else {
        nlohmann::json entries = nlohmann::json::array();
        csv << "key,bytes\n";
        for (const auto& k : cache.keys()) {
            const std::size_t bytes = cache.load(k).value_or("").size();
            entries.push_back({{"key", k}, {"bytes", bytes}});
            text << k << "  " << bytes << " bytes\n";
            csv << k << ',' << bytes << '\n';
        }
        out.json = {{"dir", cfg.cache_dir.string()}, {"entries", entries}};
        if (entries.empty()) {
            text << "cache " << cfg.cache_dir.string() << " is empty\n";
        }
    }
    out.text = text.str();
    out.csv = csv.str();
    return out;
}

} // namespace

void validate(const RunConfig& cfg)
{
    if (cfg.precision_digits < 30) {
        throw ConfigError("precision must be at least 30 digits");
    }
    if (!(cfg.isolation_width > 0 && cfg.isolation_width < 1)) {
        throw ConfigError("isolation width must lie in (0, 1)");
    }
    if (!(cfg.shift_xi > 0)) {
        throw ConfigError("shift xi must be positive");
    }
    if (cfg.command == "period" && cfg.period != 2 && cfg.period != 3) {
        throw ConfigError("period must be 2 or 3");
    }
    if ((cfg.command == "manifold" || cfg.command == "homoclinic") && (cfg.order < 2 || cfg.order > 8)) {
        throw ConfigError("manifold order must lie in [2, 8]");
    }
    if (cfg.command == "homoclinic" && cfg.order < 5) {
        throw ConfigError("homoclinic searches need order at least 5");
    }
    if (cfg.command == "integral-check" && (cfg.integral_samples < 1 || !(cfg.integral_tol > 0))) {
        throw ConfigError("integral-check needs samples >= 1 and tol > 0");
    }
    if (cfg.command == "classify" && cfg.iterations < 1) {
        throw ConfigError("iterations must be positive");
    }
    if (cfg.command == "manifold" && (cfg.samples < 1 || cfg.grid < 1)) {
        throw ConfigError("samples and grid must be positive");
    }
    const bool uses_cache = cfg.command == "cache" || (cfg.command == "period" && cfg.period == 3 && cfg.use_cache);
    if (uses_cache) {
        std::error_code ec;
        std::filesystem::create_directories(cfg.cache_dir, ec);
        const auto probe = cfg.cache_dir / ".write-probe";
        std::FILE* f = std::fopen(probe.c_str(), "w");
        if (!f) {
            throw ConfigError("cache directory " + cfg.cache_dir.string() + " is not writable");
        }
        std::fclose(f);
        std::filesystem::remove(probe, ec);
    }
}

void split_volatile(nlohmann::json& j, nlohmann::json& info, const std::string& path)
{
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end();) {
            const std::string p = path + "/" + it.key();
            if (it.key() == "seconds" || it.key() == "from_cache") {
                info[p] = it.value();
                it = j.erase(it);
            } else {
                split_volatile(it.value(), info, p);
                ++it;
            }
        }
    } else if (j.is_array()) {
        for (std::size_t k = 0; k < j.size(); ++k) {
            split_volatile(j[k], info, path + "/" + std::to_string(k));
        }
    }
}

Output run(const RunConfig& cfg)
{
    validate(cfg);
    RunConfig c = cfg;
    if (c.workers == 0) {
        c.workers = std::max(1U, std::thread::hardware_concurrency());
    }
    const auto t0 = std::chrono::steady_clock::now();
    Output out;
    if (c.command == "fixed-points") {
        out = fixed_points_cmd(c);
    } else if (c.command == "period") {
        out = c.period == 2 ? period2_cmd() : period3_cmd(c);
    } else if (c.command == "manifold") {
        out = manifold_cmd(c);
    } else if (c.command == "homoclinic") {
        out = homoclinic_cmd(c);
    } else if (c.command == "integral-check") {
        out = integral_check_cmd(c);
    } else if (c.command == "classify") {
        out = classify_cmd(c);
    } else if (c.command == "cache") {
        out = cache_cmd(c);
    } else {
        throw ConfigError("unknown command '" + c.command + "'");
    }
    split_volatile(out.json, out.run_info);
    out.run_info["/total_seconds"] = seconds_since(t0);
    out.json = {{"command", c.command}, {"config", config_json(c)}, {"result", std::move(out.json)}};
    return out;
}

std::string render(const Output& out, Format f)
{
    switch (f) {
    case Format::Csv:
        return out.csv;
    case Format::Text:
        return out.text;
    case Format::Json:
        break;
    }
    nlohmann::json j = out.json;
    j["run_info"] = out.run_info;
    return j.dump(2) + "\n";
}

int exit_code(Errc code)
{
    switch (code) {
    case Errc::NoConvergence:
    case Errc::DivergentIntegral:
    case Errc::ResonantDenominator:
    case Errc::NotHyperbolicSaddle:
    case Errc::SingularJacobian:
    case Errc::DomainExcluded:
    case Errc::OnForbiddenLine:
        return 3;
    case Errc::ParseError:
    case Errc::CacheError:
        return 4;
    default:
        return 2;
    }
}

} // namespace pcert::cli
