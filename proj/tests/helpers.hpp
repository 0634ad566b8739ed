#pragma once

#include <random>
#include <vector>

#include "chainbell/core_model.hpp"

namespace testutil {

// Deterministic strictly positive Schmidt state; entries bounded away from
// zero so divergences stay finite.
inline chainbell::SchmidtVector random_state(int d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::vector<double> c(static_cast<std::size_t>(d));
    for (double& x : c) x = u(rng);
    return chainbell::validate_schmidt(std::move(c), {.renormalize = true});
}

inline std::vector<double> random_signed(int d, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> v(static_cast<std::size_t>(d));
    for (double& x : v) x = u(rng);
    return v;
}

}  // namespace testutil
