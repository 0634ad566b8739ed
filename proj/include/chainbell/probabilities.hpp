#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "chainbell/core_model.hpp"

namespace chainbell {

// Outcome probability P(a,b|x,y) for a Schmidt-diagonal state under the
// model's phase-shifted Fourier bases: (1/d^2) |sum_k lambda_k w^{k chi}|^2
// with chi = a - b + alpha_x + beta_y. Evaluated as two real O(d) sums.
double prob_general(const Scenario& scenario, const SchmidtVector& state,
                    int x, int y, int a, int b);

// Closed form of the same probability for the maximally entangled state:
// sin^2(pi chi) / (d^3 sin^2(pi chi / d)), with the removable singularity at
// chi = multiple of d patched to its limit 1/d.
double prob_maxent(const Scenario& scenario, int x, int y, int a, int b);

// The formula above as a function of the raw offset chi. The model's own
// chi always carries an odd-over-2N fractional part, so the singular branch
// (|chi - d*round(chi/d)| < 1e-12 -> 1/d) is reachable only through here.
double prob_maxent_at_offset(const Scenario& scenario, double chi);

// Dense table of P(a,b|x,y) for every setting pair and outcome pair.
// Deliberately capped at d <= 512: the table is O(N^2 d^2) doubles and only
// the cross-check layer needs it; large-d work goes through the matrix path.
class ProbabilityTable {
  public:
    static constexpr int kMaxOutcomes = 512;

    ProbabilityTable(Scenario scenario, std::vector<double> entries);

    const Scenario& scenario() const { return scenario_; }

    double at(int x, int y, int a, int b) const {
        return entries_[index(x, y, a, b)];
    }

    std::span<const double> entries() const { return entries_; }

  private:
    std::size_t index(int x, int y, int a, int b) const;

    Scenario scenario_;
    std::vector<double> entries_;  // [(x*N + y)*d + a]*d + b
};

// Tabulates the model distribution of `state`. Uses one O(d^2) discrete
// Fourier pass per setting pair (entries depend on a-b mod d only).
ProbabilityTable build_table(const Scenario& scenario, const SchmidtVector& state);

// Wraps externally produced entries after validating shape, nonnegativity
// and per-(x,y) normalization (1e-12). Layout matches ProbabilityTable::at.
ProbabilityTable table_from_entries(const Scenario& scenario,
                                    std::vector<double> entries);

// Bell functional evaluated directly on a probability table:
// P(A_{N-1} >= B_0) + sum_n P(A_n < B_n) + sum_n P(B_{n+1} < A_n).
double bell_value_from_probs(const ProbabilityTable& table);

// The companion expression over modular outcome differences,
// sum_n <[A_n - B_n]> + sum_n <[B_{n+1} - A_n]> + <[B_0 - A_{N-1} - 1]>,
// related to the functional above by I = d*B - 1 for no-signaling tables.
double barrett_value(const ProbabilityTable& table);

// Largest marginal discrepancy across contexts: how far the table is from
// satisfying no-signaling. Model tables sit at rounding level.
double nosignaling_check(const ProbabilityTable& table);

// Minimum of the Bell functional over all no-signaling distributions: 1/d.
double nosignaling_bound(const Scenario& scenario);

}  // namespace chainbell
