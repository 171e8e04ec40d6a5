// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "sdr/types.hpp"
#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Least-squares channel estimate from the two LTF observations, plus
/// the pilot-tracked residual common phase and timing slope of the most
/// recently equalized symbol.
struct ChannelEstimate {
    std::array<cfloat, 64> h{};  // indexed by FFT bin; zero on null carriers
    double residual_phase = 0.0;        // radians, last symbol
    double residual_slope = 0.0;        // radians per carrier, last symbol
};

/// H[k] = (LTF1[k] + LTF2[k]) / (2 * reference[k]) on occupied carriers.
/// Returns nullopt when any occupied carrier's magnitude is degenerate
/// (below 1e-6), which aborts the frame.
std::optional<ChannelEstimate> estimate_channel(std::span<const cfloat> ltf1_freq,
                                                std::span<const cfloat> ltf2_freq,
                                                const OfdmParams& p);

/// Equalize one frequency-domain symbol: divide by H, then remove the
/// common phase and timing slope measured on the four pilots (known
/// polarity at `symbol_index`). Returns the 48 data carriers in
/// bit-mapping order, or nullopt when the pilots are degenerate.
std::optional<std::array<cfloat, 48>> equalize(std::span<const cfloat> symbol_freq,
                                               ChannelEstimate& est, std::size_t symbol_index,
                                               const OfdmParams& p);

}  // namespace sdr::wifi
