#include "chainbell/bell_matrix.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chainbell/kahan.hpp"

namespace chainbell {

namespace {
constexpr double kPi = std::numbers::pi;
}

void check_symbol_signs(std::span<const double> symbol) {
    if (symbol.empty()) throw std::logic_error("symbol: empty");
    if (!(symbol[0] > 0.0))
        throw std::logic_error("symbol: diagonal entry not positive: " +
                               std::to_string(symbol[0]));
    for (std::size_t m = 1; m < symbol.size(); ++m) {
        if (!(symbol[m] < 0.0) || !std::isfinite(symbol[m]))
            throw std::logic_error("symbol: off-diagonal entry t_" + std::to_string(m) +
                                   " = " + std::to_string(symbol[m]) +
                                   " is not strictly negative");
    }
}

BellMatrix build_bell_matrix(const Scenario& scenario) {
    const double n = static_cast<double>(scenario.n_settings);
    const double d = static_cast<double>(scenario.n_outcomes);

    std::vector<double> t(static_cast<std::size_t>(scenario.n_outcomes));
    // Closed form for the diagonal; the sin/sin ratio at m=0 is (N-1)/N by
    // continuity, so writing N - (N-1)/d directly avoids evaluating 0/0.
    t[0] = n - (n - 1.0) / d;
    for (int m = 1; m < scenario.n_outcomes; ++m) {
        const double mm = static_cast<double>(m);
        t[static_cast<std::size_t>(m)] =
            -(n / d) * std::sin((n - 1.0) * kPi * mm / (d * n)) / std::sin(kPi * mm / d);
    }
    check_symbol_signs(t);
    return BellMatrix(scenario, std::move(t));
}

MatvecEngine::MatvecEngine(const BellMatrix& matrix, MatvecMode mode)
    : matrix_(&matrix), mode_(mode) {
    if (mode_ != MatvecMode::fast) return;

    const std::size_t d = static_cast<std::size_t>(matrix.dim());
    const std::size_t len = Radix2Fft::next_pow2(2 * d);
    fft_ = std::make_unique<Radix2Fft>(len);
    scratch_.resize(len);

    // First column of the circulant embedding: symbol mirrored around the
    // wrap point. len >= 2d keeps the mirrored tail clear of the head.
    std::vector<std::complex<double>> col(len, {0.0, 0.0});
    const auto t = matrix.symbol();
    col[0] = t[0];
    for (std::size_t m = 1; m < d; ++m) {
        col[m] = t[m];
        col[len - m] = t[m];
    }
    fft_->forward(col.data());
    // Symmetric real input => real spectrum; the imaginary parts are rounding
    // noise and get dropped.
    circulant_spectrum_.resize(len);
    for (std::size_t i = 0; i < len; ++i) circulant_spectrum_[i] = col[i].real();
}

void MatvecEngine::apply(std::span<const double> v, std::span<double> out) {
    const std::size_t d = static_cast<std::size_t>(matrix_->dim());
    if (v.size() != d || out.size() != d)
        throw std::invalid_argument("matvec: dimension mismatch");
    if (v.data() == out.data())
        throw std::invalid_argument("matvec: input and output may not alias");

    if (mode_ == MatvecMode::naive) {
        const auto t = matrix_->symbol();
        for (std::size_t k = 0; k < d; ++k) {
            double s = 0.0;
            for (std::size_t l = 0; l < d; ++l) {
                const std::size_t m = k >= l ? k - l : l - k;
                s += t[m] * v[l];
            }
            out[k] = s;
        }
        return;
    }

    const std::size_t len = fft_->length();
    for (std::size_t i = 0; i < d; ++i) scratch_[i] = v[i];
    for (std::size_t i = d; i < len; ++i) scratch_[i] = 0.0;
    fft_->forward(scratch_.data());
    for (std::size_t i = 0; i < len; ++i) scratch_[i] *= circulant_spectrum_[i];
    fft_->inverse(scratch_.data());
    for (std::size_t i = 0; i < d; ++i) out[i] = scratch_[i].real();
}

std::vector<double> matvec(MatvecEngine& engine, std::span<const double> v) {
    std::vector<double> out(v.size());
    engine.apply(v, out);
    return out;
}

std::vector<double> matvec(const BellMatrix& matrix, MatvecEngine& engine,
                           std::span<const double> v) {
    if (&engine.matrix() != &matrix)
        throw std::invalid_argument("matvec: engine bound to a different matrix");
    return matvec(engine, v);
}

double bell_value(MatvecEngine& engine, std::span<const double> v) {
    std::vector<double> w(v.size());
    engine.apply(v, w);
    return kahan_dot(v, w);
}

double bell_value(const BellMatrix& matrix, const SchmidtVector& state) {
    if (state.dim() != matrix.dim())
        throw std::invalid_argument("bell_value: state dimension mismatch");
    MatvecEngine engine(matrix, MatvecMode::naive);
    return bell_value(engine, state.coefficients());
}

double maxent_value_symbol_sum(const BellMatrix& matrix) {
    const auto t = matrix.symbol();
    const double d = static_cast<double>(matrix.dim());
    KahanAccumulator acc;
    acc.add(t[0]);
    for (std::size_t m = 1; m < t.size(); ++m)
        acc.add(2.0 * (d - static_cast<double>(m)) * t[m] / d);
    return acc.value();
}

double maxent_value_expanded(const Scenario& scenario) {
    const double n = static_cast<double>(scenario.n_settings);
    const double d = static_cast<double>(scenario.n_outcomes);
    const double s = std::sin(kPi / (2.0 * n)) * std::sin(kPi / (2.0 * n));
    const double half = 1.0 / (2.0 * n);

    auto inv_sin2 = [&](double z) {
        const double sn = std::sin(kPi * z / d);
        return 1.0 / (sn * sn);
    };

    KahanAccumulator acc;
    acc.add(s / (d * d) * inv_sin2(1.0 - half));
    for (int j = 1; j < scenario.n_outcomes; ++j) {
        const double jj = static_cast<double>(j);
        acc.add((d - jj) / (d * d * d) * s *
                ((2.0 * n - 1.0) * inv_sin2(jj - half) + inv_sin2(jj + 1.0 - half)));
    }
    return acc.value();
}

}  // namespace chainbell
