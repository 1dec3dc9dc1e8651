#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include "bcq/qseries.hpp"
#include "report.hpp"

namespace bcq::tools {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// One verification run. M = 0 picks the grid from n; tol = 0 keeps the
// per-check tolerances, a positive tol replaces all of them.
struct SuiteConfig {
    std::string suite = "aw";
    int n = 2;
    int max_degree = 0;
    double q = 0.5;
    double t = 0.5;
    std::array<cplx, 4> tp{};
    double a = 0.3;
    double b = 0.2;
    double c = 1.0;
    double d = 0.7;
    int N = 2;
    int M = 0;
    int depth = 0;
    double tol = 0.0;
    std::uint64_t seed = 20240601;
    int kmax = 20;
    double eps0 = 1.0;
    std::string out;
    std::string format = "json";

    // Throws ConfigError on an unknown suite or an out-of-range field.
    void validate() const;
    // Every field as a canonical key=value map, for the report.
    std::map<std::string, std::string> echo() const;
};

// The shipped parameter set of a suite.
SuiteConfig default_config(const std::string& suite);

// Reads "key = value" lines; '#' starts a comment. Throws IoError when the
// file cannot be read and ConfigError on a malformed line.
std::map<std::string, std::string> read_config_file(const std::string& path);

// Builds a config: defaults of the named suite ("aw" if none), then the
// entries in order. Throws ConfigError on unknown keys or bad values.
SuiteConfig make_config(const std::map<std::string, std::string>& entries);

// Parses "x", "yi", "x+yi" or "x-yi".
cplx parse_complex(const std::string& s);

// Runs every check of the suite; individual failures are recorded in the
// report, never thrown. Checks are ordered by name.
CertificationReport run_suite(const SuiteConfig& cfg);

}  // namespace bcq::tools
