#include "chainbell/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace chainbell {

std::size_t Radix2Fft::next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) {
        if (p > (static_cast<std::size_t>(-1) >> 1))
            throw std::overflow_error("next_pow2: length overflow");
        p <<= 1;
    }
    return p;
}

Radix2Fft::Radix2Fft(std::size_t length) : n_(length) {
    if (n_ == 0 || (n_ & (n_ - 1)) != 0)
        throw std::invalid_argument("Radix2Fft: length must be a power of two");

    twiddle_.resize(n_ / 2);
    for (std::size_t j = 0; j < n_ / 2; ++j) {
        const double ang = -2.0 * std::numbers::pi * static_cast<double>(j) /
                           static_cast<double>(n_);
        twiddle_[j] = {std::cos(ang), std::sin(ang)};
    }

    bitrev_.resize(n_);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n_) ++bits;
    for (std::size_t i = 0; i < n_; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        bitrev_[i] = r;
    }
}

void Radix2Fft::transform(std::complex<double>* a, bool invert) const {
    for (std::size_t i = 0; i < n_; ++i)
        if (i < bitrev_[i]) std::swap(a[i], a[bitrev_[i]]);

    for (std::size_t len = 2; len <= n_; len <<= 1) {
        const std::size_t half = len >> 1;
        const std::size_t step = n_ / len;
        for (std::size_t block = 0; block < n_; block += len) {
            for (std::size_t j = 0; j < half; ++j) {
                std::complex<double> w = twiddle_[j * step];
                if (invert) w = std::conj(w);
                const std::complex<double> u = a[block + j];
                const std::complex<double> v = a[block + j + half] * w;
                a[block + j] = u + v;
                a[block + j + half] = u - v;
            }
        }
    }

    if (invert) {
        const double scale = 1.0 / static_cast<double>(n_);
        for (std::size_t i = 0; i < n_; ++i) a[i] *= scale;
    }
}

void Radix2Fft::forward(std::complex<double>* data) const { transform(data, false); }

void Radix2Fft::inverse(std::complex<double>* data) const { transform(data, true); }

}  // namespace chainbell
