#include "chainbell/eigensolver.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "chainbell/kahan.hpp"

namespace chainbell {

namespace {

double norm2(std::span<const double> v) { return std::sqrt(kahan_dot(v, v)); }

SchmidtVector wrap_positive_state(std::vector<double> v) {
    KahanAccumulator sum;
    for (double x : v) sum.add(x);
    if (sum.value() < 0.0)
        for (double& x : v) x = -x;
    // Flush denormal dust so downstream logs/ratios behave.
    for (double& x : v)
        if (std::abs(x) < 1e-300) x = 0.0;
    return validate_schmidt(std::move(v), {.renormalize = true});
}

}  // namespace

ViolationResult power_iteration(const BellMatrix& matrix, const SolverConfig& config) {
    if (config.max_iterations < 1)
        throw std::invalid_argument("power_iteration: max_iterations must be >= 1");
    if (!(config.residual_tolerance > 0.0))
        throw std::invalid_argument("power_iteration: tolerance must be > 0");

    const int d = matrix.dim();
    const double shift = static_cast<double>(matrix.scenario().n_settings);
    MatvecEngine engine(matrix, config.matvec_mode);

    std::vector<double> v(static_cast<std::size_t>(d),
                          1.0 / std::sqrt(static_cast<double>(d)));
    std::vector<double> w(static_cast<std::size_t>(d));

    const int step_budget = config.fixed_twenty_steps ? 20 : config.max_iterations;

    ViolationResult result;
    result.scenario = matrix.scenario();

    double rho = 0.0;
    int steps = 0;
    bool converged = false;
    for (;;) {
        // w = M'v = shift*v - M*v; rho and the residual always describe the
        // *current* v, so the returned triple is self-consistent.
        engine.apply(v, w);
        for (int i = 0; i < d; ++i)
            w[static_cast<std::size_t>(i)] =
                shift * v[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(i)];
        rho = kahan_dot(v, w);

        KahanAccumulator res2;
        for (int i = 0; i < d; ++i) {
            const double r =
                w[static_cast<std::size_t>(i)] - rho * v[static_cast<std::size_t>(i)];
            res2.add(r * r);
        }
        result.residual = std::sqrt(res2.value());

        if (config.fixed_twenty_steps) {
            if (steps == step_budget) {
                converged = true;
                break;
            }
        } else if (result.residual <= config.residual_tolerance * std::abs(rho)) {
            converged = true;
            break;
        } else if (steps == step_budget) {
            break;
        }

        const double nrm = norm2(w);
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw std::runtime_error("power_iteration: iterate collapsed");
        for (int i = 0; i < d; ++i)
            v[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / nrm;
        ++steps;
    }

    result.iterations_used = steps;
    result.converged = converged;
    result.min_eigenvalue = shift - rho;
    result.optimal_state = wrap_positive_state(std::move(v));
    result.bell_value = bell_value(engine, result.optimal_state.coefficients());
    return result;
}

std::pair<double, SchmidtVector> dense_min_eig_oracle(const BellMatrix& matrix) {
    const int d = matrix.dim();
    if (d > 2000)
        throw std::invalid_argument("dense_min_eig_oracle: capped at d = 2000");

    const std::size_t n = static_cast<std::size_t>(d);
    std::vector<double> a(n * n);
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            a[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(l)] =
                matrix.entry(k, l);

    std::vector<double> vec(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) vec[i * n + i] = 1.0;

    auto frob2 = [&](bool off_only) {
        KahanAccumulator s;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = 0; q < n; ++q)
                if (!off_only || p != q) s.add(a[p * n + q] * a[p * n + q]);
        return s.value();
    };

    const double stop = 1e-30 * frob2(false);
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (frob2(true) <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const double arp = a[r * n + p];
                    const double arq = a[r * n + q];
                    a[r * n + p] = a[p * n + r] = arp - s * (arq + tau * arp);
                    a[r * n + q] = a[q * n + r] = arq + s * (arp - tau * arq);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    const double vrp = vec[r * n + p];
                    const double vrq = vec[r * n + q];
                    vec[r * n + p] = vrp - s * (vrq + tau * vrp);
                    vec[r * n + q] = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (a[i * n + i] < a[best * n + best]) best = i;

    std::vector<double> column(n);
    for (std::size_t r = 0; r < n; ++r) column[r] = vec[r * n + best];
    KahanAccumulator sum;
    for (double x : column) sum.add(x);
    if (sum.value() < 0.0)
        for (double& x : column) x = -x;
    return {a[best * n + best],
            validate_schmidt(std::move(column), {.renormalize = true})};
}

}  // namespace chainbell
