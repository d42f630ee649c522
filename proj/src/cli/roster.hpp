#pragma once
// Config-driven verification runner: resolves designators, executes a roster
// of checks with per-target isolation, caches character tables, and emits
// deterministic structured reports.

#include <nlohmann/json.hpp>

#include "catalog/catalog.hpp"
#include "primes/primes.hpp"

namespace wordmap::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolkitVersion = "0.1.0";

struct RosterConfig {
    uint64_t seed = 1;
    int threads = 0;  // 0: hardware default
    std::string cache_dir;
    std::vector<Json> targets;

    static RosterConfig parse(const Json& j);  // rejects unknown keys
};

struct VerificationReport {
    Json target;      // echo
    std::string status;
    bool error = false;
    Json payload;     // witnesses / missed / values, check-specific
    double wall_ms = 0.0;
    uint64_t seed = 0;
    bool cache_hit = false;
    bool matches_expectation = true;
};

std::vector<VerificationReport> run_roster(const RosterConfig& cfg);

Json report_json(const std::vector<VerificationReport>& reports, const RosterConfig& cfg,
                 bool include_timing = true);
std::string report_markdown(const std::vector<VerificationReport>& reports);

// exit code contract: 0 iff every target matched its expected status
bool all_expectations_met(const std::vector<VerificationReport>& reports);

primes::LieFamily parse_lie_family(const std::string& s);

}  // namespace wordmap::cli
