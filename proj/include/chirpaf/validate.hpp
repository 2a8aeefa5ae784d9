// validate.hpp - the acceptance suite: quantitative checks against the
// closed-form predictions, run by the validate subcommand and the
// acceptance test binary.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chirpaf {

struct CheckLine {
    std::string what;
    double measured = 0.0;
    double required = 0.0;
    std::string op;  // "<=", ">=", "in" (band given in what)
    bool pass = false;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool skipped = false;
    bool passed = false;
    double seconds = 0.0;
    std::vector<CheckLine> checks;
};

struct AcceptanceConfig {
    bool quick = false;       // run only the fast subset (1, 5, 8)
    std::uint64_t seed = 0;   // randomized suites
};

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

/// JSON report of the results (machine-readable pass/fail per criterion).
std::string acceptance_report_json(const std::vector<CriterionResult>& results);

}  // namespace chirpaf
