#pragma once

#include <utility>

#include "chainbell/bell_matrix.hpp"
#include "chainbell/core_model.hpp"

namespace chainbell {

struct SolverConfig {
    int max_iterations = 100000;
    // Relative residual target: stop once ||M'v - rho v|| <= this * rho.
    double residual_tolerance = 1e-10;
    // Run exactly 20 update steps and skip the residual test, reproducing
    // the fixed schedule the reference data was generated with.
    bool fixed_twenty_steps = false;
    MatvecMode matvec_mode = MatvecMode::fast;
    // Reserved for bit-reproducibility of any parallel reductions; the
    // solver itself is sequential, so this is currently inert.
    bool deterministic = false;
};

struct ViolationResult {
    Scenario scenario;
    // Smallest eigenvalue of M, i.e. the optimal Bell value.
    double min_eigenvalue = 0.0;
    // v^T M v of the returned state, recomputed independently of the
    // eigenvalue estimate as a consistency handle.
    double bell_value = 0.0;
    SchmidtVector optimal_state;
    int iterations_used = 0;
    // ||M'v - rho v||_2 at the returned iterate (equals the residual of M
    // at the complementary eigenvalue).
    double residual = 0.0;
    bool converged = false;
};

// Finds the smallest eigenpair of M via power iteration on M' = N*I - M,
// which is entrywise positive, so the dominant eigenvector is the positive
// one the model needs. Starts from the uniform vector. Never throws on
// non-convergence; inspect `converged`.
ViolationResult power_iteration(const BellMatrix& matrix, const SolverConfig& config = {});

// Full-spectrum cross-check: cyclic Jacobi on the dense matrix. Quadratic
// memory and cubic time, so capped at d <= 2000; exists to validate the
// iterative path, not to be fast.
std::pair<double, SchmidtVector> dense_min_eig_oracle(const BellMatrix& matrix);

}  // namespace chainbell
