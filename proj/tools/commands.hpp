#pragma once

#include "pcert/arith/rational.hpp"
#include "pcert/error.hpp"
#include "pcert/manifold/manifold.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

namespace pcert::cli {

enum class Format { Json, Csv, Text };

struct RunConfig {
    std::string command;    // fixed-points, period, manifold, homoclinic, integral-check, classify, cache
    std::string subcommand; // cache: inspect | clear
    unsigned precision_digits = 60;
    Rational isolation_width{1, Integer("100000000000000000000")};
    Rational shift_xi = 30;
    std::filesystem::path cache_dir;
    bool use_cache = true;
    Format format = Format::Json;
    unsigned workers = 0;

    int period = 3;
    unsigned order = 5;
    EigenNormalization normalization = EigenNormalization::UnitFirstComponent;
    std::string curve = "manifold"; // manifold CSV: manifold | zero-grid
    int samples = 201;
    double r_min = -3.5;
    double r_max = 0.5;
    int grid = 60;
    int integral_samples = 10;
    double integral_tol = 1e-9;
    std::uint64_t seed = 1;
    std::string a = "3.1";
    std::string b = "2.9";
    int iterations = 200;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Throws ConfigError.
void validate(const RunConfig& cfg);

struct Output {
    nlohmann::json json; // deterministic part
    nlohmann::json run_info = nlohmann::json::object(); // timings and cache hits
    std::string csv;
    std::string text;
};

Output run(const RunConfig& cfg);

std::string render(const Output& out, Format f);

// 2 certification failure, 3 numeric non-convergence, 4 bad configuration.
int exit_code(Errc code);

// Moves every "seconds" and "from_cache" entry of j into info, keyed by JSON pointer.
void split_volatile(nlohmann::json& j, nlohmann::json& info, const std::string& path = "");

} // namespace pcert::cli
