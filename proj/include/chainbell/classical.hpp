#pragma once

#include <span>
#include <vector>

#include "chainbell/core_model.hpp"

namespace chainbell {

// One deterministic local strategy pair: Alice answers alice[x] for setting
// x, Bob answers bob[y]; each entry lies in [0, n_outcomes).
struct DeterministicStrategy {
    std::vector<int> alice;
    std::vector<int> bob;
};

// Bell functional of one deterministic strategy. Integer-valued by
// construction.
double strategy_value(const Scenario& scenario, std::span<const int> alice,
                      std::span<const int> bob);
double strategy_value(const Scenario& scenario, const DeterministicStrategy& s);

struct ClassicalResult {
    Scenario scenario;
    double min_value = 0.0;
    std::vector<int> alice;             // minimizing assignment, one outcome per setting
    std::vector<int> bob;
    unsigned long long strategy_pairs = 0;  // d^{2N}, the size of the search
};

// Exhaustive minimum over all d^{2N} deterministic strategy pairs. Refuses
// instances with more than `cap` pairs. Ties resolve to the lexicographically
// first (alice index, bob index) pair, so the result does not depend on the
// worker count. workers = 0 picks a machine-appropriate number.
ClassicalResult classical_min_bruteforce(const Scenario& scenario,
                                         unsigned long long cap = 100000000ull,
                                         int workers = 0);

}  // namespace chainbell
