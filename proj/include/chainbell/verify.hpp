#pragma once

#include <string>
#include <vector>

namespace chainbell {

struct CheckResult {
    std::string name;
    bool pass = false;
    double metric = 0.0;     // measured worst-case deviation (or value)
    double threshold = 0.0;  // what the metric must stay at or below
};

// Quick cross-module consistency battery: every number that can be computed
// two ways is computed two ways. Runs in a few seconds.
std::vector<CheckResult> run_verify();

}  // namespace chainbell
