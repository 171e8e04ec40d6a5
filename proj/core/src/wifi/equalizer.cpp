// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/equalizer.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "sdr/wifi/preamble.hpp"

namespace sdr::wifi {

std::optional<ChannelEstimate> estimate_channel(std::span<const cfloat> ltf1_freq,
                                                std::span<const cfloat> ltf2_freq,
                                                const OfdmParams& p) {
    if (ltf1_freq.size() != p.fft_size || ltf2_freq.size() != p.fft_size)
        throw std::invalid_argument("LTF observations must be full FFT vectors");
    ChannelEstimate est;
    for (int c = -26; c <= 26; ++c) {
        if (c == 0) continue;
        const float ref = ltf_reference(c);
        const std::size_t k = p.bin(c);
        const cfloat h = (ltf1_freq[k] + ltf2_freq[k]) / (2.0f * ref);
        if (!std::isfinite(h.real()) || !std::isfinite(h.imag()) || std::abs(h) < 1e-6f)
            return std::nullopt;
        est.h[k] = h;
    }
    return est;
}

std::optional<std::array<cfloat, 48>> equalize(std::span<const cfloat> symbol_freq,
                                               ChannelEstimate& est, std::size_t symbol_index,
                                               const OfdmParams& p) {
    if (symbol_freq.size() != p.fft_size)
        throw std::invalid_argument("symbol must be a full FFT vector");

    const float pol = pilot_polarity(symbol_index);
    // Pilot observations after channel division, rotated back by the
    // known transmitted value (+-1), leaving only the residual rotation.
    std::array<std::complex<double>, 4> r{};
    for (std::size_t i = 0; i < 4; ++i) {
        const std::size_t k = p.bin(OfdmParams::pilot_carriers[i]);
        if (std::abs(est.h[k]) < 1e-6f) return std::nullopt;
        const cfloat eq = symbol_freq[k] / est.h[k];
        const float expect = OfdmParams::pilot_values[i] * pol;
        r[i] = std::complex<double>(eq) * static_cast<double>(expect);
        if (std::abs(r[i]) < 1e-9) return std::nullopt;
    }

    // Timing slope from the phase ramp between the low and high pilot
    // pairs (mean carrier offset 28), then the common phase with the
    // slope removed.
    const auto lo = r[0] + r[1];  // carriers -21, -7 (mean -14)
    const auto hi = r[2] + r[3];  // carriers +7, +21 (mean +14)
    const double slope = std::arg(hi * std::conj(lo)) / 28.0;

    std::complex<double> acc{};
    const std::array<int, 4> kc = OfdmParams::pilot_carriers;
    for (std::size_t i = 0; i < 4; ++i)
        acc += r[i] * std::polar(1.0, -slope * static_cast<double>(kc[i]));
    const double phase = std::arg(acc);

    est.residual_phase = phase;
    est.residual_slope = slope;

    std::array<cfloat, 48> out{};
    const auto& dc = OfdmParams::data_carriers();
    for (std::size_t i = 0; i < dc.size(); ++i) {
        const std::size_t k = p.bin(dc[i]);
        const cfloat eq = symbol_freq[k] / est.h[k];
        const double derot = -(phase + slope * static_cast<double>(dc[i]));
        out[i] = eq * cfloat(std::polar(1.0f, static_cast<float>(derot)));
    }
    return out;
}

}  // namespace sdr::wifi
