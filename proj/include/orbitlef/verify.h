#pragma once

#include <string>
#include <vector>

namespace orbitlef::verify {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

// Runs the complete verification suite against the fixture directory.
// Exceptions inside a criterion are caught and reported as failures.
std::vector<CriterionResult> run_all(const std::string& data_dir);

bool all_pass(const std::vector<CriterionResult>& rs);

} // namespace orbitlef::verify
