#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "chainbell/bell_matrix.hpp"
#include "chainbell/core_model.hpp"
#include "chainbell/fft.hpp"
#include "helpers.hpp"

using namespace chainbell;

namespace {

std::vector<std::complex<double>> random_complex(std::size_t n, unsigned seed) {
    const std::vector<double> re = testutil::random_signed(static_cast<int>(n), seed);
    const std::vector<double> im = testutil::random_signed(static_cast<int>(n), seed + 1);
    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = {re[i], im[i]};
    return a;
}

}  // namespace

TEST_CASE("next_pow2") {
    CHECK(Radix2Fft::next_pow2(1) == 1);
    CHECK(Radix2Fft::next_pow2(2) == 2);
    CHECK(Radix2Fft::next_pow2(3) == 4);
    CHECK(Radix2Fft::next_pow2(4) == 4);
    CHECK(Radix2Fft::next_pow2(5) == 8);
    CHECK(Radix2Fft::next_pow2(1023) == 1024);
    CHECK(Radix2Fft::next_pow2(1025) == 2048);
}

TEST_CASE("fft constructor rejects non powers of two") {
    CHECK_THROWS_AS(Radix2Fft(0), std::invalid_argument);
    CHECK_THROWS_AS(Radix2Fft(3), std::invalid_argument);
    CHECK_THROWS_AS(Radix2Fft(12), std::invalid_argument);
    CHECK_NOTHROW(Radix2Fft(16));
}

TEST_CASE("fft roundtrip restores the input") {
    for (std::size_t n : {std::size_t{8}, std::size_t{1024}}) {
        const Radix2Fft fft(n);
        const std::vector<std::complex<double>> orig = random_complex(n, 11);
        std::vector<std::complex<double>> a = orig;
        fft.forward(a.data());
        fft.inverse(a.data());
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - orig[i]));
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("fft of a delta is flat, of a constant a spike") {
    const Radix2Fft fft(32);
    std::vector<std::complex<double>> delta(32, 0.0);
    delta[0] = 1.0;
    fft.forward(delta.data());
    for (const auto& v : delta) CHECK(std::abs(v - 1.0) <= 1e-14);

    std::vector<std::complex<double>> flat(32, 1.0);
    fft.forward(flat.data());
    CHECK(std::abs(flat[0] - 32.0) <= 1e-12);
    for (std::size_t k = 1; k < 32; ++k) CHECK(std::abs(flat[k]) <= 1e-12);
}

TEST_CASE("fft preserves energy up to the length factor") {
    const std::size_t n = 256;
    const Radix2Fft fft(n);
    std::vector<std::complex<double>> a = random_complex(n, 23);
    double before = 0.0;
    for (const auto& v : a) before += std::norm(v);
    fft.forward(a.data());
    double after = 0.0;
    for (const auto& v : a) after += std::norm(v);
    CHECK(after / static_cast<double>(n) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("bell matrix symbol: pinned values") {
    const BellMatrix m22 = build_bell_matrix(make_scenario(2, 2));
    REQUIRE(m22.symbol().size() == 2);
    CHECK(std::abs(m22.symbol()[0] - 1.5) <= 1e-15);
    CHECK(std::abs(m22.symbol()[1] + 0.70710678118654752) <= 1e-15);

    const BellMatrix m23 = build_bell_matrix(make_scenario(2, 3));
    CHECK(std::abs(m23.symbol()[0] - 1.6666666666666667) <= 1e-15);
    CHECK(std::abs(m23.symbol()[1] + 0.38490017945975051) <= 1e-14);
    CHECK(std::abs(m23.symbol()[2] + 0.66666666666666667) <= 1e-14);

    const BellMatrix m33 = build_bell_matrix(make_scenario(3, 3));
    CHECK(std::abs(m33.symbol()[0] - 2.3333333333333333) <= 1e-15);
    CHECK(std::abs(m33.symbol()[1] + 0.74222719896855916) <= 1e-14);
    CHECK(std::abs(m33.symbol()[2] + 1.1371580426032576) <= 1e-14);
}

TEST_CASE("bell matrix symbol: structure across the family") {
    for (int n = 2; n <= 6; ++n) {
        for (int d = 1; d <= 100; d += (d < 8 ? 1 : 13)) {
            const BellMatrix m = build_bell_matrix(make_scenario(n, d));
            REQUIRE(static_cast<int>(m.symbol().size()) == d);
            // diagonal closed form N - (N-1)/d
            CHECK(std::abs(m.symbol()[0] - (n - double(n - 1) / d)) <= 1e-13);
            for (std::size_t k = 1; k < m.symbol().size(); ++k)
                CHECK(m.symbol()[k] < 0.0);
        }
    }
}

TEST_CASE("entry() reads the symbol by index distance") {
    const BellMatrix m = build_bell_matrix(make_scenario(3, 6));
    for (int k = 0; k < 6; ++k)
        for (int l = 0; l < 6; ++l) {
            CHECK(m.entry(k, l) == m.symbol()[static_cast<std::size_t>(std::abs(k - l))]);
            CHECK(m.entry(k, l) == m.entry(l, k));
        }
}

TEST_CASE("check_symbol_signs flags corrupted symbols") {
    CHECK_NOTHROW(check_symbol_signs(std::vector<double>{1.0, -0.5, -0.1}));
    CHECK_THROWS_AS(check_symbol_signs(std::vector<double>{1.0, 0.5}), std::logic_error);
    CHECK_THROWS_AS(check_symbol_signs(std::vector<double>{-1.0}), std::logic_error);
    CHECK_THROWS_AS(check_symbol_signs(std::vector<double>{}), std::logic_error);
}

TEST_CASE("matvec: row sums at (2,2)") {
    const BellMatrix m = build_bell_matrix(make_scenario(2, 2));
    MatvecEngine engine(m, MatvecMode::naive);
    const std::vector<double> ones = {1.0, 1.0};
    const std::vector<double> out = matvec(engine, ones);
    CHECK(std::abs(out[0] - 0.79289321881345248) <= 1e-14);
    CHECK(std::abs(out[1] - 0.79289321881345248) <= 1e-14);
}

TEST_CASE("matvec: unit vectors reproduce matrix columns") {
    const BellMatrix m = build_bell_matrix(make_scenario(3, 9));
    MatvecEngine fast(m, MatvecMode::fast);
    for (int k = 0; k < 9; ++k) {
        std::vector<double> e(9, 0.0);
        e[static_cast<std::size_t>(k)] = 1.0;
        const std::vector<double> col = matvec(fast, e);
        for (int i = 0; i < 9; ++i)
            CHECK(std::abs(col[static_cast<std::size_t>(i)] - m.entry(i, k)) <= 1e-12);
    }
}

TEST_CASE("matvec: naive and fast agree on random vectors") {
    for (int n : {2, 3}) {
        for (int d : {2, 3, 17, 512, 4096}) {
            const BellMatrix m = build_bell_matrix(make_scenario(n, d));
            MatvecEngine naive(m, MatvecMode::naive);
            MatvecEngine fast(m, MatvecMode::fast);
            const std::vector<double> v =
                testutil::random_signed(d, static_cast<unsigned>(100 * n + d));
            const std::vector<double> a = matvec(naive, v);
            const std::vector<double> b = matvec(fast, v);
            double num = 0.0, den = 0.0;
            for (int i = 0; i < d; ++i) {
                num = std::max(num, std::abs(a[i] - b[i]));
                den = std::max(den, std::abs(a[i]));
            }
            CHECK(num / den <= 1e-10);
        }
    }
}

TEST_CASE("matvec commutes with index reversal") {
    // M is symmetric about the anti-diagonal, so reversing the input just
    // reverses the output.
    const BellMatrix m = build_bell_matrix(make_scenario(2, 33));
    MatvecEngine engine(m, MatvecMode::fast);
    const std::vector<double> v = testutil::random_signed(33, 7);
    std::vector<double> rev(v.rbegin(), v.rend());
    const std::vector<double> mv = matvec(engine, v);
    const std::vector<double> mrev = matvec(engine, rev);
    for (int i = 0; i < 33; ++i)
        CHECK(std::abs(mv[static_cast<std::size_t>(i)] - mrev[static_cast<std::size_t>(32 - i)]) <=
              1e-12);
}

TEST_CASE("matvec argument validation") {
    const BellMatrix m = build_bell_matrix(make_scenario(2, 5));
    const BellMatrix other = build_bell_matrix(make_scenario(2, 6));
    MatvecEngine engine(m, MatvecMode::fast);
    std::vector<double> v(5, 1.0);
    std::vector<double> wrong(4, 1.0);
    CHECK_THROWS_AS(matvec(engine, wrong), std::invalid_argument);
    CHECK_THROWS_AS(matvec(other, engine, std::vector<double>(6, 1.0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(engine.apply(v, v), std::invalid_argument);
}

TEST_CASE("quadratic form is nonnegative on signed vectors") {
    for (int n : {2, 3, 5}) {
        for (int d : {2, 7, 40}) {
            const BellMatrix m = build_bell_matrix(make_scenario(n, d));
            MatvecEngine engine(m, MatvecMode::fast);
            for (unsigned seed = 0; seed < 5; ++seed) {
                std::vector<double> v =
                    testutil::random_signed(d, 1000u * n + 10u * d + seed);
                double norm2 = 0.0;
                for (double x : v) norm2 += x * x;
                for (double& x : v) x /= std::sqrt(norm2);
                CHECK(bell_value(engine, v) >= -1e-10);
            }
        }
    }
}

TEST_CASE("bell value of the maximally entangled state: three routes") {
    for (int n : {2, 3, 5}) {
        for (int d : {1, 2, 3, 10, 41}) {
            const BellMatrix m = build_bell_matrix(make_scenario(n, d));
            const double via_symbol = maxent_value_symbol_sum(m);
            const double via_expansion = maxent_value_expanded(m.scenario());
            const double via_form = bell_value(m, maxent_state(d));
            CHECK(std::abs(via_symbol - via_expansion) <= 1e-12);
            CHECK(std::abs(via_symbol - via_form) <= 1e-12);
        }
    }
}

TEST_CASE("maxent bell values: pinned instances") {
    auto value = [](int n, int d) {
        return maxent_value_symbol_sum(build_bell_matrix(make_scenario(n, d)));
    };
    CHECK(std::abs(value(2, 2) - 0.79289321881345248) <= 1e-12);
    CHECK(std::abs(value(2, 3) - 0.70902198294255488) <= 1e-12);
    CHECK(std::abs(value(2, 5) - 0.63578207677116901) <= 1e-12);
    CHECK(std::abs(value(3, 2) - 0.70096189432334203) <= 1e-12);
    CHECK(std::abs(value(3, 3) - 0.58559170630641605) <= 1e-12);
    CHECK(std::abs(value(5, 4) - 0.41195519801066102) <= 1e-12);
    CHECK(value(4, 1) == doctest::Approx(1.0).epsilon(1e-14));
}
