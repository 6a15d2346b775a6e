#include "doctest.h"

#include "commands.hpp"

#include <filesystem>
#include <fstream>

using namespace pcert;
using namespace pcert::cli;

namespace {

RunConfig config(const std::string& command)
{
    RunConfig c;
    c.command = command;
    c.workers = 1;
    c.cache_dir = std::filesystem::temp_directory_path() / "pcert-test-cli";
    return c;
}

} // namespace

TEST_CASE("configuration validation")
{
    RunConfig c = config("fixed-points");
    CHECK_NOTHROW(validate(c));

    c.precision_digits = 20;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.precision_digits = 60;

    c.isolation_width = 0;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.isolation_width = 2;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.isolation_width = Rational(1, 1000);

    c.shift_xi = -1;
    CHECK_THROWS_AS(validate(c), ConfigError);
    c.shift_xi = 30;

    RunConfig p = config("period");
    p.period = 4;
    CHECK_THROWS_AS(validate(p), ConfigError);

    RunConfig m = config("manifold");
    m.order = 1;
    CHECK_THROWS_AS(validate(m), ConfigError);
    m.order = 9;
    CHECK_THROWS_AS(validate(m), ConfigError);

    RunConfig h = config("homoclinic");
    h.order = 4;
    CHECK_THROWS_AS(validate(h), ConfigError);

    RunConfig u = config("no-such-command");
    CHECK_THROWS_AS(run(u), ConfigError);
}

TEST_CASE("unwritable cache directory is a configuration error")
{
    const auto file = std::filesystem::temp_directory_path() / "pcert-test-cli-file";
    std::ofstream(file) << "x";
    RunConfig c = config("cache");
    c.subcommand = "inspect";
    c.cache_dir = file / "sub";
    CHECK_THROWS_AS(validate(c), ConfigError);
    std::filesystem::remove(file);
}

TEST_CASE("exit codes")
{
    CHECK(exit_code(Errc::NoConvergence) == 3);
    CHECK(exit_code(Errc::DivergentIntegral) == 3);
    CHECK(exit_code(Errc::ResonantDenominator) == 3);
    CHECK(exit_code(Errc::NotHyperbolicSaddle) == 3);
    CHECK(exit_code(Errc::SingularJacobian) == 3);
    CHECK(exit_code(Errc::OnForbiddenLine) == 3);
    CHECK(exit_code(Errc::DomainExcluded) == 3);
    CHECK(exit_code(Errc::ParseError) == 4);
    CHECK(exit_code(Errc::CacheError) == 4);
    CHECK(exit_code(Errc::HypothesisFailed) == 2);
    CHECK(exit_code(Errc::ReplayFailed) == 2);
    CHECK(exit_code(Errc::FaceSignUndetermined) == 2);
}

TEST_CASE("volatile keys move to run info")
{
    nlohmann::json j = {{"a", 1},
                        {"seconds", 0.5},
                        {"stages", nlohmann::json::array({{{"name", "x"}, {"seconds", 1.5}, {"from_cache", true}}})}};
    nlohmann::json info = nlohmann::json::object();
    split_volatile(j, info);
    CHECK(j == nlohmann::json({{"a", 1}, {"stages", nlohmann::json::array({{{"name", "x"}}})}}));
    CHECK(info["/seconds"] == 0.5);
    CHECK(info["/stages/0/seconds"] == 1.5);
    CHECK(info["/stages/0/from_cache"] == true);
}

TEST_CASE("fixed points output is deterministic")
{
    const RunConfig c = config("fixed-points");
    const Output a = run(c);
    const Output b = run(c);
    CHECK(a.json == b.json);
    CHECK(a.json["command"] == "fixed-points");
    CHECK(a.json["result"]["fixed_points"].size() == 3);
    CHECK(a.run_info.contains("/total_seconds"));
    const auto parsed = nlohmann::json::parse(render(a, Format::Json));
    CHECK(parsed["run_info"].is_object());
    CHECK_FALSE(render(a, Format::Text).empty());
}

TEST_CASE("period 2 is deterministic")
{
    RunConfig c = config("period");
    c.period = 2;
    const Output a = run(c);
    const Output b = run(c);
    CHECK(a.json == b.json);
}

TEST_CASE("classify")
{
    RunConfig c = config("classify");
    const Output o = run(c);
    CHECK(o.json["result"]["class"] == "ConvergesToP1");

    c.a = "not-a-number";
    CHECK_THROWS(run(c));
}

TEST_CASE("manifold coefficients under unit-norm normalization")
{
    RunConfig c = config("manifold");
    c.normalization = EigenNormalization::UnitNorm;
    c.samples = 5;
    const Output o = run(c);
    const auto& r = o.json["result"];
    CHECK(r["L"].is_array());
    CHECK(r["L"].size() == 2);
    CHECK(r["center"].is_array());
    const BigFloat w2(Precision{60}, r["w"]["w2"].get<std::string>());
    const BigFloat published(Precision{60}, "-2.59107002218996975513519324145e-3");
    CHECK(abs(w2 - published) < BigFloat(Precision{60}, "1e-30"));
    CHECK(o.json["config"]["normalization"] == "unit-norm");

    // header plus one row per sample
    std::size_t lines = 0;
    for (char ch : o.csv) {
        lines += ch == '\n';
    }
    CHECK(lines == 6);

    c.curve = "zero-grid";
    c.grid = 3;
    const Output g = run(c);
    lines = 0;
    for (char ch : g.csv) {
        lines += ch == '\n';
    }
    CHECK(lines == 10);
}

TEST_CASE("integral check passes")
{
    RunConfig c = config("integral-check");
    c.integral_samples = 3;
    const Output o = run(c);
    CHECK(o.json["result"]["passed"] == true);
    CHECK(o.json["result"]["samples"].size() == 3);
    CHECK(run(c).json == o.json);
}

TEST_CASE("cache inspect and clear")
{
    RunConfig c = config("cache");
    std::filesystem::remove_all(c.cache_dir);
    c.subcommand = "inspect";
    const Output a = run(c);
    CHECK(a.json["result"]["entries"].empty());
    c.subcommand = "clear";
    const Output b = run(c);
    CHECK(b.json["result"]["removed"] == 0);
    std::filesystem::remove_all(c.cache_dir);
}
