#pragma once

#include <memory>
#include <span>
#include <vector>

#include "chainbell/core_model.hpp"
#include "chainbell/fft.hpp"

namespace chainbell {

// The Bell functional restricted to Schmidt-diagonal states is the quadratic
// form of a symmetric Toeplitz matrix M, stored here by its first row
// t_0..t_{d-1}: M_{kl} = t_{|k-l|}. The diagonal uses the closed form
// t_0 = N - (N-1)/d so there is no 0/0 special case to evaluate.
class BellMatrix {
  public:
    BellMatrix(Scenario scenario, std::vector<double> symbol)
        : scenario_(scenario), symbol_(std::move(symbol)) {}

    const Scenario& scenario() const { return scenario_; }
    int dim() const { return scenario_.n_outcomes; }
    std::span<const double> symbol() const { return symbol_; }

    double entry(int k, int l) const {
        const int m = k >= l ? k - l : l - k;
        return symbol_[static_cast<std::size_t>(m)];
    }

  private:
    Scenario scenario_;
    std::vector<double> symbol_;
};

// Evaluates the symbol t_m for the given scenario and checks the structural
// facts en route: t_m < 0 for every m >= 1 and t_0 > 0. A violation throws
// std::logic_error, since it can only come from a broken formula.
BellMatrix build_bell_matrix(const Scenario& scenario);

// The negativity check on its own, usable against synthetic symbols.
void check_symbol_signs(std::span<const double> symbol);

enum class MatvecMode { naive, fast };

// Workspace for M*v products against one fixed matrix. naive walks the
// symbol in O(d^2); fast embeds the Toeplitz matrix into a circulant of
// length next_pow2(2d) and multiplies via FFT in O(d log d). One engine per
// worker thread; the symbol itself is shared read-only.
class MatvecEngine {
  public:
    MatvecEngine(const BellMatrix& matrix, MatvecMode mode);

    MatvecMode mode() const { return mode_; }
    const BellMatrix& matrix() const { return *matrix_; }

    // out = M * v; aliasing v and out is not allowed.
    void apply(std::span<const double> v, std::span<double> out);

  private:
    const BellMatrix* matrix_;
    MatvecMode mode_;
    // fast-mode state: eigenvalues of the embedded circulant (real because
    // the embedding is symmetric) and a scratch buffer for the transforms.
    std::unique_ptr<Radix2Fft> fft_;
    std::vector<double> circulant_spectrum_;
    std::vector<std::complex<double>> scratch_;
};

std::vector<double> matvec(MatvecEngine& engine, std::span<const double> v);
// Same product, with the matrix passed alongside; throws if the engine was
// built for a different matrix.
std::vector<double> matvec(const BellMatrix& matrix, MatvecEngine& engine,
                           std::span<const double> v);

// Quadratic form v^T M v with compensated accumulation. The SchmidtVector
// overload is the Bell value of that state; the span overload also accepts
// signed vectors (used by positivity property tests).
double bell_value(MatvecEngine& engine, std::span<const double> v);
double bell_value(const BellMatrix& matrix, const SchmidtVector& state);

// Bell value of the maximally entangled state, (1/d) * sum_{kl} M_{kl},
// reduced to a weighted symbol sum.
double maxent_value_symbol_sum(const BellMatrix& matrix);

// The same quantity evaluated from the trigonometric expansion of the
// probability terms, without going through the symbol. Two code paths for
// one number, kept as a permanent cross-check.
double maxent_value_expanded(const Scenario& scenario);

}  // namespace chainbell
