#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace chainbell {

// One instance of the chained-measurement family: each party picks one of
// n_settings bases, every measurement has n_outcomes results.
struct Scenario {
    int n_settings = 0;  // N >= 2
    int n_outcomes = 0;  // d >= 1
};

// Validates N >= 2, d >= 1; throws std::invalid_argument otherwise.
Scenario make_scenario(int n_settings, int n_outcomes);

struct ValidateOptions {
    // Accept vectors of any positive norm and rescale them. When false the
    // norm must already be 1 within 1e-9.
    bool renormalize = false;
    // Reject negative entries. Solver outputs and model states are
    // entrywise nonnegative by construction; property tests that probe the
    // quadratic form with signed vectors turn this off.
    bool strict_nonnegative = true;
};

// Schmidt coefficients of a bipartite pure state, unit 2-norm. Instances are
// only created through maxent_state / validate_schmidt (or by the solver),
// so a SchmidtVector is normalized by construction.
class SchmidtVector {
  public:
    SchmidtVector() = default;

    int dim() const { return static_cast<int>(coeff_.size()); }
    std::size_t size() const { return coeff_.size(); }
    double operator[](std::size_t k) const { return coeff_[k]; }
    std::span<const double> coefficients() const { return coeff_; }

    auto begin() const { return coeff_.begin(); }
    auto end() const { return coeff_.end(); }

  private:
    explicit SchmidtVector(std::vector<double> c) : coeff_(std::move(c)) {}
    friend SchmidtVector validate_schmidt(std::vector<double>, ValidateOptions);

    std::vector<double> coeff_;
};

// Uniform Schmidt spectrum 1/sqrt(d): the maximally entangled state.
SchmidtVector maxent_state(int d);

// Checks (and optionally fixes) the SchmidtVector invariants; throws
// std::invalid_argument on empty input, zero/invalid norm, or (when
// strict_nonnegative) a negative entry.
SchmidtVector validate_schmidt(std::vector<double> coefficients,
                               ValidateOptions options = {});

// Phase offsets picked by the two parties: alpha_x = x/N for Alice,
// beta_y = (1 - 2y)/(2N) for Bob, and the root-of-unity angle 2*pi/d.
struct MeasurementPhases {
    std::vector<double> alpha;
    std::vector<double> beta;
    double omega_exponent = 0.0;  // argument of the primitive d-th root of unity
};

MeasurementPhases phases(const Scenario& scenario);

}  // namespace chainbell
