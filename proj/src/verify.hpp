#pragma once

#include <string>
#include <vector>

namespace cacti {

struct CheckResult {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;

    std::string to_json() const;
};

/// Suites: thm1polyg, thm2polyg, thm3polyg, thm1circ, thm2circ, asymptotic,
/// matrixmodel, all. The budget (seconds) picks the size ladder; results are
/// deterministic for a given budget.
SuiteReport run_suite(const std::string& name, int budget_seconds = 30);

std::vector<std::string> suite_names();

}  // namespace cacti
