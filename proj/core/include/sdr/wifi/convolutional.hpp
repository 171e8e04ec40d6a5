// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Rate-1/2 convolutional encoder, constraint length 7, generators
/// 133/171 (octal). Output is A0 B0 A1 B1 ...; the shift register starts
/// at zero.
std::vector<std::uint8_t> conv_encode(const std::vector<std::uint8_t>& bits);

/// Puncture the mother-code output for the target rate:
///   1/2: identity
///   2/3: drop B1 of every (A0 B0 A1 B1) group
///   3/4: drop B1 and A2 of every (A0 B0 A1 B1 A2 B2) group
std::vector<std::uint8_t> puncture(const std::vector<std::uint8_t>& coded, CodeRate rate);

/// Inverse of puncture for soft values: punctured positions become 0.0
/// (erasure). `coded_len` is the mother-code length (2 * info bits).
std::vector<float> depuncture(const std::vector<float>& soft, CodeRate rate,
                              std::size_t coded_len);

/// Coded bits produced for `info_bits` after puncturing at `rate`.
std::size_t punctured_len(std::size_t info_bits, CodeRate rate);

}  // namespace sdr::wifi
