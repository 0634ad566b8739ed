#pragma once

#include "chainbell/core_model.hpp"

namespace chainbell {

// The closed-form family approximating the optimal state:
// lambda_k proportional to [(k+1)(d-k)]^{-1/N}.
struct ApproxState {
    Scenario scenario;
    // Normalization before rescaling: sum_k [(k+1)(d-k)]^{-2/N}.
    double normalization = 0.0;
    SchmidtVector vector;
};

ApproxState approx_state(const Scenario& scenario);

// Entanglement entropy of the Schmidt spectrum in units of dits:
// -sum_k lambda_k^2 log(lambda_k^2) / log d. Zero coefficients contribute
// nothing; d = 1 has no dit scale and throws.
double entropy(const SchmidtVector& state);

// Kullback-Leibler divergence of the uniform spectrum from this one,
// -(1/d) sum_j log(d lambda_j^2). Any vanishing coefficient puts the
// uniform distribution outside the state's support, so the divergence
// is +infinity.
double kl_vs_maxent(const SchmidtVector& state);

struct EntropyReport {
    double entropy_dits = 0.0;
    double kl_vs_maxent = 0.0;
};

EntropyReport entropy_report(const SchmidtVector& state);

}  // namespace chainbell
