// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Per-symbol two-permutation interleaver (16 columns, then bit rotation
/// within subcarrier groups for QAM). Input length must equal n_cbps.
std::vector<std::uint8_t> interleave(const std::vector<std::uint8_t>& bits, const Mcs& mcs);

std::vector<std::uint8_t> deinterleave(const std::vector<std::uint8_t>& bits, const Mcs& mcs);

/// Soft-value deinterleave (same permutation as the bit version).
std::vector<float> deinterleave_soft(const std::vector<float>& soft, const Mcs& mcs);

}  // namespace sdr::wifi
