#include "chainbell/core_model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chainbell/kahan.hpp"

namespace chainbell {

Scenario make_scenario(int n_settings, int n_outcomes) {
    if (n_settings < 2)
        throw std::invalid_argument("scenario: need at least 2 settings, got " +
                                    std::to_string(n_settings));
    if (n_outcomes < 1)
        throw std::invalid_argument("scenario: need at least 1 outcome, got " +
                                    std::to_string(n_outcomes));
    return Scenario{n_settings, n_outcomes};
}

SchmidtVector maxent_state(int d) {
    if (d < 1) throw std::invalid_argument("maxent_state: dimension must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(d),
                          1.0 / std::sqrt(static_cast<double>(d)));
    return validate_schmidt(std::move(c), {.renormalize = true});
}

SchmidtVector validate_schmidt(std::vector<double> coefficients,
                               ValidateOptions options) {
    if (coefficients.empty())
        throw std::invalid_argument("schmidt vector: empty coefficient list");

    // Schmidt convention fixes the global sign: flip so the entry sum is
    // nonnegative before checking per-entry signs.
    KahanAccumulator entry_sum;
    for (double c : coefficients) {
        if (!std::isfinite(c))
            throw std::invalid_argument("schmidt vector: non-finite entry");
        entry_sum.add(c);
    }
    if (entry_sum.value() < 0.0)
        for (double& c : coefficients) c = -c;

    KahanAccumulator norm2;
    for (double c : coefficients) {
        if (options.strict_nonnegative && c < 0.0)
            throw std::invalid_argument("schmidt vector: negative entry " +
                                        std::to_string(c));
        norm2.add(c * c);
    }
    const double norm = std::sqrt(norm2.value());
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("schmidt vector: zero or invalid norm");
    if (!options.renormalize && std::abs(norm - 1.0) > 1e-9)
        throw std::invalid_argument("schmidt vector: norm " + std::to_string(norm) +
                                    " deviates from 1 by more than 1e-9");
    for (double& c : coefficients) c /= norm;
    return SchmidtVector(std::move(coefficients));
}

MeasurementPhases phases(const Scenario& scenario) {
    const double n = static_cast<double>(scenario.n_settings);
    MeasurementPhases p;
    p.alpha.resize(static_cast<std::size_t>(scenario.n_settings));
    p.beta.resize(static_cast<std::size_t>(scenario.n_settings));
    for (int x = 0; x < scenario.n_settings; ++x)
        p.alpha[static_cast<std::size_t>(x)] = static_cast<double>(x) / n;
    for (int y = 0; y < scenario.n_settings; ++y)
        p.beta[static_cast<std::size_t>(y)] =
            (1.0 - 2.0 * static_cast<double>(y)) / (2.0 * n);
    p.omega_exponent = 2.0 * std::numbers::pi / static_cast<double>(scenario.n_outcomes);
    return p;
}

}  // namespace chainbell
