// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdr/types.hpp"

namespace sdr::accel {

/// One fixed-point complex sample as the device consumes it: 16-bit I
/// and Q, two's complement, Q1.15 (32768 = +1.0, unrepresentable).
struct FixedComplex {
    std::int16_t i = 0;
    std::int16_t q = 0;

    bool operator==(const FixedComplex&) const = default;
};

inline constexpr double kQ15One = 32768.0;

/// Round-to-nearest-even into Q1.15 with saturation; `value` is first
/// normalized by `full_scale` (so +full_scale maps onto +1.0, which
/// saturates to 32767).
std::int16_t quantize_component(float value, float full_scale);
float dequantize_component(std::int16_t value, float full_scale);

std::vector<FixedComplex> quantize(std::span<const cfloat> x, float full_scale);
std::vector<cfloat> dequantize(std::span<const FixedComplex> x, float full_scale);

}  // namespace sdr::accel
