#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace chainbell {

// Iterative radix-2 Cooley-Tukey transform with precomputed twiddles and
// bit-reversal table. Length is fixed at construction and must be a power of
// two. This is all the FFT the Toeplitz matvec needs, so no external
// dependency is pulled in for it.
class Radix2Fft {
  public:
    explicit Radix2Fft(std::size_t length);

    std::size_t length() const { return n_; }

    // In-place DFT with the e^{-2 pi i jk / n} convention.
    void forward(std::complex<double>* data) const;
    // In-place inverse DFT, including the 1/n scaling.
    void inverse(std::complex<double>* data) const;

    static std::size_t next_pow2(std::size_t n);

  private:
    void transform(std::complex<double>* data, bool invert) const;

    std::size_t n_ = 0;
    std::vector<std::complex<double>> twiddle_;  // e^{-2 pi i j / n}, j < n/2
    std::vector<std::size_t> bitrev_;
};

}  // namespace chainbell
