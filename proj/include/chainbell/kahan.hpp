#pragma once

#include <span>

namespace chainbell {

// Compensated (Kahan) accumulator: rounding error stays O(eps) instead of
// O(n*eps), which matters for the long dot products and symbol sums here.
struct KahanAccumulator {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

inline double kahan_sum(std::span<const double> xs) {
    KahanAccumulator acc;
    for (double x : xs) acc.add(x);
    return acc.value();
}

inline double kahan_dot(std::span<const double> a, std::span<const double> b) {
    KahanAccumulator acc;
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) acc.add(a[i] * b[i]);
    return acc.value();
}

}  // namespace chainbell
