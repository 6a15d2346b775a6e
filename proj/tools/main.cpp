#include "commands.hpp"

#include "pcert/mpoly/cache.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace pcert;
using namespace pcert::cli;

int main(int argc, char** argv)
{
    CLI::App app{"Certified periodic orbits and invariant manifolds of the Landen map"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    cfg.cache_dir = DiskCache::default_dir();
    std::string format = "json";
    std::string isolation = "1e-20";
    std::string xi = "30";
    std::string cache_dir = cfg.cache_dir.string();

    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--precision", cfg.precision_digits, "Working precision in decimal digits")->capture_default_str();
    app.add_option("--workers", cfg.workers, "Worker threads (0: all hardware threads)")->capture_default_str();
    app.add_option("--isolation-width", isolation, "Width of isolating intervals")->capture_default_str();
    app.add_option("--xi", xi, "Coordinate shift for box discards")->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Cache directory (also $PCERT_CACHE_DIR)")->capture_default_str();

    app.add_subcommand("fixed-points", "Fixed points of G with classifications");

    auto* period = app.add_subcommand("period", "Periodic points of period 2 or 3");
    period->add_option("p", cfg.period, "Period")->required()->check(CLI::IsMember({2, 3}));
    bool no_cache = false;
    period->add_flag("--no-cache", no_cache, "Recompute the eliminations");

    auto* manifold = app.add_subcommand("manifold", "Local unstable manifold of the saddle");
    std::string normalization = "unit-first";
    manifold->add_option("--order", cfg.order, "Taylor order")->capture_default_str();
    manifold->add_option("--normalization", normalization, "Eigenvector normalization")
        ->check(CLI::IsMember({"unit-first", "unit-norm"}))
        ->capture_default_str();
    manifold->add_option("--curve", cfg.curve, "CSV content")
        ->check(CLI::IsMember({"manifold", "zero-grid"}))
        ->capture_default_str();
    manifold->add_option("--samples", cfg.samples, "Manifold samples")->capture_default_str();
    manifold->add_option("--r-min", cfg.r_min, "Smallest parameter")->capture_default_str();
    manifold->add_option("--r-max", cfg.r_max, "Largest parameter")->capture_default_str();
    manifold->add_option("--grid", cfg.grid, "Grid points per axis for zero-grid")->capture_default_str();

    auto* homoclinic = app.add_subcommand("homoclinic", "Homoclinic and forbidden points on the manifold");
    homoclinic->add_option("--order", cfg.order, "Taylor order")->capture_default_str();
    homoclinic->add_option("--normalization", normalization, "Eigenvector normalization")
        ->check(CLI::IsMember({"unit-first", "unit-norm"}))
        ->capture_default_str();

    auto* integral = app.add_subcommand("integral-check", "Invariance of the integral under the step");
    integral->add_option("--samples", cfg.integral_samples, "Random states")->capture_default_str();
    integral->add_option("--tol", cfg.integral_tol, "Quadrature tolerance")->capture_default_str();
    integral->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();

    auto* classify = app.add_subcommand("classify", "Numeric fate of a point under G");
    classify->add_option("--a", cfg.a, "First coordinate")->capture_default_str();
    classify->add_option("--b", cfg.b, "Second coordinate")->capture_default_str();
    classify->add_option("--iters", cfg.iterations, "Iteration limit")->capture_default_str();

    auto* cache = app.add_subcommand("cache", "Inspect or clear the elimination cache");
    cache->require_subcommand(1);
    cache->add_subcommand("inspect", "List cached entries");
    cache->add_subcommand("clear", "Remove cached entries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 4;
    }

    try {
        const auto* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();
        if (cfg.command == "cache") {
            cfg.subcommand = sub->get_subcommands().front()->get_name();
        }
        cfg.format = format == "csv" ? Format::Csv : format == "text" ? Format::Text : Format::Json;
        cfg.normalization =
            normalization == "unit-norm" ? EigenNormalization::UnitNorm : EigenNormalization::UnitFirstComponent;
        cfg.use_cache = !no_cache;
        if (app.get_option("--cache-dir")->count() > 0) {
            cfg.cache_dir = cache_dir;
        }
        cfg.isolation_width = parse_rational(isolation);
        cfg.shift_xi = parse_rational(xi);
        const Output out = run(cfg);
        std::cout << render(out, cfg.format);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
