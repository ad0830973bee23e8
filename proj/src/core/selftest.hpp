#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuthex {

struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// Runs the full exact verification suite (one entry per criterion) and streams
// one PASS/FAIL line per criterion to `live` when given.
std::vector<CheckResult> run_acceptance(std::ostream* live = nullptr);
bool all_passed(const std::vector<CheckResult>& results);

}  // namespace cuthex
