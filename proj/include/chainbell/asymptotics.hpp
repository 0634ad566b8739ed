#pragma once

#include <optional>

namespace chainbell {

inline constexpr double kCatalan = 0.91596559417721901505;

// Evaluation knobs for the in-repo special functions. The defaults hold
// absolute error near 1e-14 over the arguments the model produces, well
// inside the advertised budget.
struct SpecialFunctionBudget {
    double target_abs_error = 1e-12;
    // Arguments below this are shifted up by the recurrence before the
    // asymptotic series is applied. 10 keeps the series remainder far
    // below the target for double-width arguments.
    double recurrence_shift_threshold = 10.0;
};

// psi_1(z) = d^2/dz^2 log Gamma(z) for z > 0: upward recurrence to the
// shift threshold, then the asymptotic series through the z^{-13} term.
double trigamma(double z, const SpecialFunctionBudget& budget = {});

// log Gamma(z) for z > 0, same shift-then-Stirling scheme.
double log_gamma(double z, const SpecialFunctionBudget& budget = {});

// Constant governing the approximate state's large-d divergence,
// 2^{4/N - 1} sqrt(pi) Gamma(1 - 2/N) / Gamma(3/2 - 2/N); needs N >= 3
// (the Gamma factor has a pole at N = 2).
double c_n(int n_settings);

// Many-settings limit of the maximally entangled Bell value: 1/d, which is
// also the no-signaling bound.
double maxent_limit_large_n(int n_outcomes);

// Many-outcomes limit of the maximally entangled Bell value:
// (2N / pi^2) psi_1(1 - 1/(2N)) sin^2(pi / (2N)).
double maxent_limit_large_d(int n_settings);

// Large-d entropy of the approximate state: 1/2 for N = 2, 1 for N >= 3.
double approx_entropy_limit(int n_settings);

// Large-d divergence of the approximate state from uniform:
// log C_N - 4/N for N >= 3, +infinity for N = 2.
double kl_limit(int n_settings);

struct LimitReport {
    int n_settings = 0;
    double maxent_limit = 0.0;            // large-d limit at this N
    double approx_entropy_limit = 0.0;
    double kl_limit = 0.0;                // +inf when N = 2
    std::optional<double> c_n;            // absent when N = 2
};

LimitReport limits_for(int n_settings);

}  // namespace chainbell
