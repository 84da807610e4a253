// Batch front end: dispatches subcommands to the library and renders
// deterministic JSON/CSV reports. Timing never enters the canonical bytes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bicubic/boxcount.hpp"
#include "bicubic/report.hpp"

namespace bicubic {

struct RunConfig {
    std::string subcommand;  // count-points | boxcount | constant | verify | trend
    i64 height_bound = 0;
    std::string method = "both";  // direct | torsor | both
    bool with_points = false;
    CoeffTriple r{1, 1, 1};
    IntBox box;
    bool mellin_check = false;
    i64 prime_cutoff = 1000;
    bool full_constant = false;
    QuadratureSpec quad;
    std::string suite = "all";
    std::vector<i64> height_bounds;       // trend
    std::string output_format = "json";   // json | csv
    std::string output_path;              // empty = stdout
    std::uint64_t seed = 0;
    int thread_count = 0;  // hint only; results never depend on it
};

struct ReportDocument {
    std::string tool_version;
    Json config_echo;
    Json results;
    double timing_ms = 0;
    bool all_passed = true;  // verify suites; true elsewhere
    std::string csv;         // set when output_format == csv applies
};

ReportDocument run(const RunConfig& config);

// Canonical serialized bytes (JSON or CSV); excludes timing.
std::string serialize(const RunConfig& config, const ReportDocument& doc);

// Parses "k=v" lines into flag overrides; '#' comments and blanks skipped.
std::vector<std::string> config_file_args(const std::string& path);

struct VerifyCheck {
    std::string name;
    bool passed = true;
    Json detail;
};

struct VerifySuiteResult {
    std::string suite;
    std::vector<VerifyCheck> checks;
    Json extra;  // suite-specific top-level payload
    bool passed() const;
};

VerifySuiteResult verify_suite(const std::string& name, std::uint64_t seed);

inline constexpr const char* tool_version = "bicubic 1.0.0";

}  // namespace bicubic
