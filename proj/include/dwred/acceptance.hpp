#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace dwred {

struct AcceptanceOptions {
    int max_order = 1000;           // restrict the group grid
    int threads = 0;                // <= 0 selects default_thread_count()
    unsigned long long seed = 2026; // for randomized property checks
};

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceSummary {
    std::vector<CriterionResult> results;
    bool all_passed = false;
};

/// Runs the full verification grid, printing one pass/fail line per
/// criterion to `out`.
AcceptanceSummary run_acceptance(const AcceptanceOptions& opt, std::ostream& out);

nlohmann::json acceptance_to_json(const AcceptanceSummary& s);

} // namespace dwred
