#include "chainbell/states.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "chainbell/kahan.hpp"

namespace chainbell {

ApproxState approx_state(const Scenario& scenario) {
    const int d = scenario.n_outcomes;
    const double inv_n = 1.0 / static_cast<double>(scenario.n_settings);

    std::vector<double> u(static_cast<std::size_t>(d));
    KahanAccumulator norm2;
    for (int k = 0; k < d; ++k) {
        const double base =
            (static_cast<double>(k) + 1.0) * (static_cast<double>(d - k));
        u[static_cast<std::size_t>(k)] = std::pow(base, -inv_n);
        norm2.add(u[static_cast<std::size_t>(k)] * u[static_cast<std::size_t>(k)]);
    }

    ApproxState out;
    out.scenario = scenario;
    out.normalization = norm2.value();
    out.vector = validate_schmidt(std::move(u), {.renormalize = true});
    return out;
}

double entropy(const SchmidtVector& state) {
    const int d = state.dim();
    if (d < 2)
        throw std::invalid_argument("entropy: undefined in dits for d < 2");

    KahanAccumulator acc;
    for (double lam : state) {
        const double p = lam * lam;
        if (p > 0.0) acc.add(-p * std::log(p));
    }
    return acc.value() / std::log(static_cast<double>(d));
}

double kl_vs_maxent(const SchmidtVector& state) {
    const int d = state.dim();
    const double dd = static_cast<double>(d);

    KahanAccumulator acc;
    for (double lam : state) {
        const double p = lam * lam;
        if (p == 0.0) return std::numeric_limits<double>::infinity();
        acc.add(std::log(dd * p));
    }
    return -acc.value() / dd;
}

EntropyReport entropy_report(const SchmidtVector& state) {
    return {entropy(state), kl_vs_maxent(state)};
}

}  // namespace chainbell
