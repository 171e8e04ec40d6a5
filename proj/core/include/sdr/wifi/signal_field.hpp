// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Decoded SIGNAL field: rate selection plus the 12-bit PSDU length.
struct SignalField {
    const Mcs* mcs = nullptr;
    std::size_t length = 0;
};

enum class SignalError : std::uint8_t { None, BadParity, BadRate, BadTail, BadLength };

/// The 24 plain (pre-FEC) SIGNAL bits: 4 rate bits, reserved 0, 12-bit
/// length LSB first, even parity over the first 17 bits, 6 zero tail bits.
std::vector<std::uint8_t> signal_bits(const Mcs& mcs, std::size_t length);

/// Decode the SIGNAL symbol from its 48 demapped soft bits (interleaved
/// order, straight off the BPSK demapper): deinterleave, Viterbi-decode
/// rate 1/2, then validate rate, parity, tail, and length.
std::optional<SignalField> decode_signal(std::span<const float> soft_bits,
                                         SignalError* error = nullptr);

}  // namespace sdr::wifi
