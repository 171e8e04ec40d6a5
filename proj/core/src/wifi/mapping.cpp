// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/mapping.hpp"

#include <cmath>
#include <stdexcept>

namespace sdr::wifi {

namespace {
constexpr float kModQpsk = 0.70710678118654752440f;   // 1/sqrt(2)
constexpr float kModQam16 = 0.31622776601683793320f;  // 1/sqrt(10)
constexpr float kModQam64 = 0.15430334996209191026f;  // 1/sqrt(42)

// axis value for the bit group, first bit in the MSB position
constexpr float kAxis2[4] = {+3.0f, +1.0f, -3.0f, -1.0f};           // 00 01 10 11
constexpr float kAxis3[8] = {+7.0f, +5.0f, +1.0f, +3.0f,            // 000 001 010 011
                             -7.0f, -5.0f, -1.0f, -3.0f};           // 100 101 110 111

std::uint32_t group(std::span<const std::uint8_t> bits, std::size_t at, std::size_t n) {
    std::uint32_t g = 0;
    for (std::size_t i = 0; i < n; ++i) g = (g << 1) | (bits[at + i] & 1u);
    return g;
}
}  // namespace

std::size_t bits_per_point(Modulation mod) {
    switch (mod) {
    case Modulation::Bpsk: return 1;
    case Modulation::Qpsk: return 2;
    case Modulation::Qam16: return 4;
    case Modulation::Qam64: return 6;
    }
    throw std::invalid_argument("unknown modulation");
}

std::vector<cfloat> map_bits(std::span<const std::uint8_t> bits, Modulation mod) {
    const std::size_t bpp = bits_per_point(mod);
    if (bits.size() % bpp != 0)
        throw std::invalid_argument("bit count is not a whole number of constellation points");
    std::vector<cfloat> out(bits.size() / bpp);
    for (std::size_t p = 0; p < out.size(); ++p) {
        const std::size_t at = p * bpp;
        switch (mod) {
        case Modulation::Bpsk:
            out[p] = {bits[at] ? -1.0f : 1.0f, 0.0f};
            break;
        case Modulation::Qpsk:
            out[p] = cfloat{bits[at] ? -1.0f : 1.0f, bits[at + 1] ? -1.0f : 1.0f} * kModQpsk;
            break;
        case Modulation::Qam16:
            out[p] = cfloat{kAxis2[group(bits, at, 2)], kAxis2[group(bits, at + 2, 2)]} * kModQam16;
            break;
        case Modulation::Qam64:
            out[p] = cfloat{kAxis3[group(bits, at, 3)], kAxis3[group(bits, at + 3, 3)]} * kModQam64;
            break;
        }
    }
    return out;
}

std::vector<float> demap_soft(std::span<const cfloat> points, Modulation mod) {
    const std::size_t bpp = bits_per_point(mod);
    std::vector<float> out(points.size() * bpp);
    std::size_t o = 0;
    for (const cfloat p : points) {
        switch (mod) {
        case Modulation::Bpsk:
            out[o++] = p.real();
            break;
        case Modulation::Qpsk: {
            out[o++] = p.real() / kModQpsk;
            out[o++] = p.imag() / kModQpsk;
            break;
        }
        case Modulation::Qam16: {
            const float yi = p.real() / kModQam16, yq = p.imag() / kModQam16;
            out[o++] = yi;
            out[o++] = std::abs(yi) - 2.0f;
            out[o++] = yq;
            out[o++] = std::abs(yq) - 2.0f;
            break;
        }
        case Modulation::Qam64: {
            const float yi = p.real() / kModQam64, yq = p.imag() / kModQam64;
            out[o++] = yi;
            out[o++] = std::abs(yi) - 4.0f;
            out[o++] = std::abs(std::abs(yi) - 4.0f) - 2.0f;
            out[o++] = yq;
            out[o++] = std::abs(yq) - 4.0f;
            out[o++] = std::abs(std::abs(yq) - 4.0f) - 2.0f;
            break;
        }
        }
    }
    return out;
}

}  // namespace sdr::wifi
