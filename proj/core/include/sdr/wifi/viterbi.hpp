// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sdr::wifi {

/// Soft-decision Viterbi decoder for the K=7, 133/171 mother code.
/// `soft` holds one metric per mother-code bit (2 * n_info); positive
/// means coded bit 0, magnitude is confidence, 0 is an erasure (as
/// inserted by depuncture). With `tail_terminated` the survivor must end
/// in the zero state (requires 6 zero tail bits in the info stream);
/// otherwise the best end state wins (used for data blocks where padding
/// follows the tail mid-stream).
std::vector<std::uint8_t> viterbi_decode(std::span<const float> soft, std::size_t n_info,
                                         bool tail_terminated);

}  // namespace sdr::wifi
