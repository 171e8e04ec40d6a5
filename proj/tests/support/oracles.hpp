// SPDX-License-Identifier: Apache-2.0
//
// Slow-but-obviously-correct reference implementations the tests compare
// the library against, plus small deterministic data helpers.
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "sdr/dsp/rng.hpp"
#include "sdr/types.hpp"

namespace oracle {

/// O(N^2) discrete Fourier transform in double precision. Forward is
/// unscaled, inverse carries 1/N — the library's convention.
inline std::vector<sdr::cfloat> naive_dft(std::span<const sdr::cfloat> x, bool inverse = false) {
    const std::size_t n = x.size();
    std::vector<sdr::cfloat> out(n);
    const double sign = inverse ? 2.0 : -2.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t m = 0; m < n; ++m) {
            const double ph = sign * std::numbers::pi * static_cast<double>(k * m) /
                              static_cast<double>(n);
            acc += std::complex<double>(x[m].real(), x[m].imag()) *
                   std::complex<double>(std::cos(ph), std::sin(ph));
        }
        if (inverse) acc /= static_cast<double>(n);
        out[k] = sdr::cfloat(static_cast<float>(acc.real()), static_cast<float>(acc.imag()));
    }
    return out;
}

/// Direct-form convolution y[n] = sum_k taps[k] x[n-k], zero history.
inline std::vector<sdr::cfloat> direct_convolve(std::span<const float> taps,
                                                std::span<const sdr::cfloat> x) {
    std::vector<sdr::cfloat> y(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < taps.size() && k <= n; ++k)
            acc += static_cast<double>(taps[k]) *
                   std::complex<double>(x[n - k].real(), x[n - k].imag());
        y[n] = sdr::cfloat(static_cast<float>(acc.real()), static_cast<float>(acc.imag()));
    }
    return y;
}

/// Uniform random complex vector with components in [-amp, amp).
inline std::vector<sdr::cfloat> random_cvec(sdr::dsp::Rng& rng, std::size_t n,
                                            float amp = 0.45f) {
    std::vector<sdr::cfloat> v(n);
    for (auto& s : v)
        s = sdr::cfloat(amp * (2.0f * static_cast<float>(rng.uniform()) - 1.0f),
                        amp * (2.0f * static_cast<float>(rng.uniform()) - 1.0f));
    return v;
}

inline std::vector<std::uint8_t> random_bits(sdr::dsp::Rng& rng, std::size_t n) {
    std::vector<std::uint8_t> b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng.next_u64() & 1);
    return b;
}

inline std::vector<std::uint8_t> random_bytes(sdr::dsp::Rng& rng, std::size_t n) {
    std::vector<std::uint8_t> b(n);
    for (auto& x : b) x = static_cast<std::uint8_t>(rng.next_u64() & 0xFF);
    return b;
}

inline float max_abs_err(std::span<const sdr::cfloat> a, std::span<const sdr::cfloat> b) {
    float m = 0.0f;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

/// 10 log10(signal power / error power) of `got` against `ref`.
inline double snr_db(std::span<const sdr::cfloat> ref, std::span<const sdr::cfloat> got) {
    double sig = 0.0, err = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        sig += static_cast<double>(std::norm(ref[i]));
        err += static_cast<double>(std::norm(got[i] - ref[i]));
    }
    if (err == 0.0) return 1e9;
    return 10.0 * std::log10(sig / err);
}

}  // namespace oracle
