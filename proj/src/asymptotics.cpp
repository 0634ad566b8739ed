#include "chainbell/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chainbell {

namespace {
constexpr double kPi = std::numbers::pi;

void require_positive(double z, const char* who) {
    if (!(z > 0.0) || !std::isfinite(z))
        throw std::invalid_argument(std::string(who) +
                                    ": argument must be positive and finite, got " +
                                    std::to_string(z));
}
}  // namespace

double trigamma(double z, const SpecialFunctionBudget& budget) {
    require_positive(z, "trigamma");

    // psi_1(z) = psi_1(z+1) + 1/z^2, applied until the asymptotic series
    // at the shifted argument is accurate.
    double acc = 0.0;
    while (z < budget.recurrence_shift_threshold) {
        acc += 1.0 / (z * z);
        z += 1.0;
    }

    // psi_1(z) ~ 1/z + 1/(2 z^2) + sum_k B_{2k} / z^{2k+1}; Bernoulli
    // numbers B_2..B_12. At z >= 10 the truncation sits below 2e-15.
    static constexpr double kBernoulli[] = {
        1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0,
    };
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = inv + 0.5 * inv2;
    double power = inv * inv2;  // z^{-3}
    for (double b : kBernoulli) {
        series += b * power;
        power *= inv2;
    }
    return acc + series;
}

double log_gamma(double z, const SpecialFunctionBudget& budget) {
    require_positive(z, "log_gamma");

    // log Gamma(z) = log Gamma(z+1) - log z until Stirling applies.
    double acc = 0.0;
    while (z < budget.recurrence_shift_threshold) {
        acc -= std::log(z);
        z += 1.0;
    }

    static constexpr double kStirling[] = {
        1.0 / 12.0,   -1.0 / 360.0,  1.0 / 1260.0,
        -1.0 / 1680.0, 1.0 / 1188.0, -691.0 / 360360.0,
    };
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double series = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi);
    double power = inv;  // z^{-1}
    for (double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return acc + series;
}

double c_n(int n_settings) {
    if (n_settings < 3)
        throw std::invalid_argument(
            "c_n: defined for n_settings >= 3 (Gamma pole at 2)");
    const double n = static_cast<double>(n_settings);
    const double log_value = (4.0 / n - 1.0) * std::log(2.0) + 0.5 * std::log(kPi) +
                             log_gamma(1.0 - 2.0 / n) - log_gamma(1.5 - 2.0 / n);
    return std::exp(log_value);
}

double maxent_limit_large_n(int n_outcomes) {
    if (n_outcomes < 1)
        throw std::invalid_argument("maxent_limit_large_n: need n_outcomes >= 1");
    return 1.0 / static_cast<double>(n_outcomes);
}

double maxent_limit_large_d(int n_settings) {
    if (n_settings < 2)
        throw std::invalid_argument("maxent_limit_large_d: need n_settings >= 2");
    const double n = static_cast<double>(n_settings);
    const double s = std::sin(kPi / (2.0 * n));
    return (2.0 * n / (kPi * kPi)) * trigamma(1.0 - 1.0 / (2.0 * n)) * s * s;
}

double approx_entropy_limit(int n_settings) {
    if (n_settings < 2)
        throw std::invalid_argument("approx_entropy_limit: need n_settings >= 2");
    return n_settings == 2 ? 0.5 : 1.0;
}

double kl_limit(int n_settings) {
    if (n_settings < 2)
        throw std::invalid_argument("kl_limit: need n_settings >= 2");
    if (n_settings == 2) return std::numeric_limits<double>::infinity();
    return std::log(c_n(n_settings)) - 4.0 / static_cast<double>(n_settings);
}

LimitReport limits_for(int n_settings) {
    LimitReport report;
    report.n_settings = n_settings;
    report.maxent_limit = maxent_limit_large_d(n_settings);
    report.approx_entropy_limit = approx_entropy_limit(n_settings);
    report.kl_limit = kl_limit(n_settings);
    if (n_settings >= 3) report.c_n = c_n(n_settings);
    return report;
}

}  // namespace chainbell
