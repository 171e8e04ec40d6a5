// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "sdr/types.hpp"

namespace sdr::wifi {

/// Impairment harness settings. `snr_db` is calibrated against the
/// convolved signal's measured power; +infinity disables noise.
struct ChannelConfig {
    double cfo_hz = 0.0;
    double snr_db = std::numeric_limits<double>::infinity();
    std::vector<cfloat> taps = {cfloat{1.0f, 0.0f}};
    std::size_t start_pad = 0;  // noise-only samples prepended
    std::uint64_t seed = 1;
    double sample_rate = 10e6;
};

/// Convolve with the channel taps, rotate by the carrier frequency
/// offset, prepend the pad, and add white Gaussian noise over the whole
/// buffer. Deterministic for a given seed. Output length is
/// start_pad + |samples| + |taps| - 1.
std::vector<cfloat> apply_channel(std::span<const cfloat> samples, const ChannelConfig& cfg);

}  // namespace sdr::wifi
