#include "chainbell/probabilities.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "chainbell/kahan.hpp"

namespace chainbell {

namespace {

constexpr double kPi = std::numbers::pi;

void check_setting(const Scenario& s, int x, int y) {
    if (x < 0 || x >= s.n_settings || y < 0 || y >= s.n_settings)
        throw std::invalid_argument("probability: setting out of range");
}

void check_outcome(const Scenario& s, int a, int b) {
    if (a < 0 || a >= s.n_outcomes || b < 0 || b >= s.n_outcomes)
        throw std::invalid_argument("probability: outcome out of range");
}

double phase_sum(const Scenario& s, int x, int y) {
    // alpha_x + beta_y = (2(x - y) + 1) / (2N)
    return (2.0 * static_cast<double>(x - y) + 1.0) /
           (2.0 * static_cast<double>(s.n_settings));
}

}  // namespace

double prob_general(const Scenario& scenario, const SchmidtVector& state,
                    int x, int y, int a, int b) {
    check_setting(scenario, x, y);
    check_outcome(scenario, a, b);
    if (state.dim() != scenario.n_outcomes)
        throw std::invalid_argument("probability: state dimension mismatch");

    const double d = static_cast<double>(scenario.n_outcomes);
    const double chi = static_cast<double>(a - b) + phase_sum(scenario, x, y);
    const double theta = 2.0 * kPi * chi / d;

    KahanAccumulator re, im;
    for (int k = 0; k < scenario.n_outcomes; ++k) {
        const double lam = state[static_cast<std::size_t>(k)];
        re.add(lam * std::cos(theta * k));
        im.add(lam * std::sin(theta * k));
    }
    const double c = re.value(), s = im.value();
    return (c * c + s * s) / (d * d);
}

double prob_maxent_at_offset(const Scenario& scenario, double chi) {
    const double d = static_cast<double>(scenario.n_outcomes);

    // chi a multiple of d makes both sines vanish; the ratio tends to d^2
    // and the probability to 1/d.
    if (std::abs(std::remainder(chi, d)) < 1e-12) return 1.0 / d;

    const double num = std::sin(kPi * chi);
    const double den = std::sin(kPi * chi / d);
    return (num * num) / (d * d * d * den * den);
}

double prob_maxent(const Scenario& scenario, int x, int y, int a, int b) {
    check_setting(scenario, x, y);
    check_outcome(scenario, a, b);
    return prob_maxent_at_offset(
        scenario, static_cast<double>(a - b) + phase_sum(scenario, x, y));
}

std::size_t ProbabilityTable::index(int x, int y, int a, int b) const {
    check_setting(scenario_, x, y);
    check_outcome(scenario_, a, b);
    const std::size_t n = static_cast<std::size_t>(scenario_.n_settings);
    const std::size_t d = static_cast<std::size_t>(scenario_.n_outcomes);
    return ((static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)) * d +
            static_cast<std::size_t>(a)) *
               d +
           static_cast<std::size_t>(b);
}

ProbabilityTable::ProbabilityTable(Scenario scenario, std::vector<double> entries)
    : scenario_(scenario), entries_(std::move(entries)) {
    if (scenario_.n_outcomes > kMaxOutcomes)
        throw std::invalid_argument("probability table: d capped at " +
                                    std::to_string(kMaxOutcomes));
    const std::size_t n = static_cast<std::size_t>(scenario_.n_settings);
    const std::size_t d = static_cast<std::size_t>(scenario_.n_outcomes);
    if (entries_.size() != n * n * d * d)
        throw std::invalid_argument("probability table: wrong entry count");
}

ProbabilityTable build_table(const Scenario& scenario, const SchmidtVector& state) {
    if (state.dim() != scenario.n_outcomes)
        throw std::invalid_argument("probability table: state dimension mismatch");
    if (scenario.n_outcomes > ProbabilityTable::kMaxOutcomes)
        throw std::invalid_argument("probability table: d capped at " +
                                    std::to_string(ProbabilityTable::kMaxOutcomes));

    const int n = scenario.n_settings;
    const int d = scenario.n_outcomes;
    const double dd = static_cast<double>(d);
    std::vector<double> entries(static_cast<std::size_t>(n) * n * d * d);

    // For fixed (x,y), P(a,b) depends on a-b only through (a-b) mod d:
    // with mu_k = lambda_k e^{2 pi i k c / d}, c = alpha_x + beta_y,
    // P = |sum_k mu_k e^{2 pi i k delta / d}|^2 / d^2 at delta = (a-b) mod d.
    std::vector<std::complex<double>> mu(static_cast<std::size_t>(d));
    std::vector<double> p_of_delta(static_cast<std::size_t>(d));
    std::size_t idx = 0;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            const double c = phase_sum(scenario, x, y);
            for (int k = 0; k < d; ++k) {
                const double ang = 2.0 * kPi * k * c / dd;
                mu[static_cast<std::size_t>(k)] =
                    state[static_cast<std::size_t>(k)] *
                    std::complex<double>(std::cos(ang), std::sin(ang));
            }
            for (int delta = 0; delta < d; ++delta) {
                KahanAccumulator re, im;
                for (int k = 0; k < d; ++k) {
                    const double ang = 2.0 * kPi * k * delta / dd;
                    const std::complex<double> z =
                        mu[static_cast<std::size_t>(k)] *
                        std::complex<double>(std::cos(ang), std::sin(ang));
                    re.add(z.real());
                    im.add(z.imag());
                }
                const double cr = re.value(), ci = im.value();
                p_of_delta[static_cast<std::size_t>(delta)] = (cr * cr + ci * ci) / (dd * dd);
            }
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    entries[idx++] = p_of_delta[static_cast<std::size_t>(((a - b) % d + d) % d)];
        }
    }
    return ProbabilityTable(scenario, std::move(entries));
}

ProbabilityTable table_from_entries(const Scenario& scenario,
                                    std::vector<double> entries) {
    ProbabilityTable table(scenario, std::move(entries));
    const int n = scenario.n_settings;
    const int d = scenario.n_outcomes;
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            KahanAccumulator total;
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) {
                    const double p = table.at(x, y, a, b);
                    if (!std::isfinite(p) || p < -1e-12 || p > 1.0 + 1e-12)
                        throw std::invalid_argument(
                            "probability table: entry outside [0,1]");
                    total.add(p);
                }
            }
            if (std::abs(total.value() - 1.0) > 1e-12)
                throw std::invalid_argument(
                    "probability table: context not normalized, sum = " +
                    std::to_string(total.value()));
        }
    }
    return table;
}

double bell_value_from_probs(const ProbabilityTable& table) {
    const Scenario& s = table.scenario();
    const int n = s.n_settings;
    const int d = s.n_outcomes;
    KahanAccumulator acc;
    // P(A_{N-1} >= B_0)
    for (int a = 0; a < d; ++a)
        for (int b = 0; b <= a; ++b) acc.add(table.at(n - 1, 0, a, b));
    // sum_n P(A_n < B_n)
    for (int ctx = 0; ctx < n; ++ctx)
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) acc.add(table.at(ctx, ctx, a, b));
    // sum_n P(B_{n+1} < A_n)
    for (int ctx = 0; ctx + 1 < n; ++ctx)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < a; ++b) acc.add(table.at(ctx, ctx + 1, a, b));
    return acc.value();
}

double barrett_value(const ProbabilityTable& table) {
    const Scenario& s = table.scenario();
    const int n = s.n_settings;
    const int d = s.n_outcomes;
    auto mod_d = [d](int v) { return ((v % d) + d) % d; };

    KahanAccumulator acc;
    for (int ctx = 0; ctx < n; ++ctx)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                acc.add(static_cast<double>(mod_d(a - b)) * table.at(ctx, ctx, a, b));
    for (int ctx = 0; ctx + 1 < n; ++ctx)
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                acc.add(static_cast<double>(mod_d(b - a)) * table.at(ctx, ctx + 1, a, b));
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            acc.add(static_cast<double>(mod_d(b - a - 1)) * table.at(n - 1, 0, a, b));
    return acc.value();
}

double nosignaling_check(const ProbabilityTable& table) {
    const Scenario& s = table.scenario();
    const int n = s.n_settings;
    const int d = s.n_outcomes;
    double worst = 0.0;

    // Alice's marginal must not depend on y.
    for (int x = 0; x < n; ++x) {
        for (int a = 0; a < d; ++a) {
            double lo = 2.0, hi = -1.0;
            for (int y = 0; y < n; ++y) {
                KahanAccumulator m;
                for (int b = 0; b < d; ++b) m.add(table.at(x, y, a, b));
                lo = std::min(lo, m.value());
                hi = std::max(hi, m.value());
            }
            worst = std::max(worst, hi - lo);
        }
    }
    // Bob's marginal must not depend on x.
    for (int y = 0; y < n; ++y) {
        for (int b = 0; b < d; ++b) {
            double lo = 2.0, hi = -1.0;
            for (int x = 0; x < n; ++x) {
                KahanAccumulator m;
                for (int a = 0; a < d; ++a) m.add(table.at(x, y, a, b));
                lo = std::min(lo, m.value());
                hi = std::max(hi, m.value());
            }
            worst = std::max(worst, hi - lo);
        }
    }
    return worst;
}

double nosignaling_bound(const Scenario& scenario) {
    return 1.0 / static_cast<double>(scenario.n_outcomes);
}

}  // namespace chainbell
