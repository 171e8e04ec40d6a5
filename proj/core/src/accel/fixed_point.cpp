// SPDX-License-Identifier: Apache-2.0
#include "sdr/accel/fixed_point.hpp"

#include <cmath>
#include <stdexcept>

namespace sdr::accel {

std::int16_t quantize_component(float value, float full_scale) {
    if (!(full_scale > 0.0f)) throw std::invalid_argument("full_scale must be positive");
    // nearbyint under the default rounding mode is round-half-to-even.
    const double scaled =
        std::nearbyint(static_cast<double>(value) / static_cast<double>(full_scale) * kQ15One);
    if (scaled >= 32767.0) return 32767;
    if (scaled <= -32768.0) return -32768;
    return static_cast<std::int16_t>(scaled);
}

float dequantize_component(std::int16_t value, float full_scale) {
    return static_cast<float>(static_cast<double>(value) / kQ15One *
                              static_cast<double>(full_scale));
}

std::vector<FixedComplex> quantize(std::span<const cfloat> x, float full_scale) {
    std::vector<FixedComplex> out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n) {
        out[n].i = quantize_component(x[n].real(), full_scale);
        out[n].q = quantize_component(x[n].imag(), full_scale);
    }
    return out;
}

std::vector<cfloat> dequantize(std::span<const FixedComplex> x, float full_scale) {
    std::vector<cfloat> out(x.size());
    for (std::size_t n = 0; n < x.size(); ++n)
        out[n] = {dequantize_component(x[n].i, full_scale),
                  dequantize_component(x[n].q, full_scale)};
    return out;
}

}  // namespace sdr::accel
