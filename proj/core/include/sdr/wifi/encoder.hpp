// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdr/types.hpp"
#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Reference transmitter: STF, LTF, SIGNAL symbol, then the scrambled /
/// convolutionally-coded / punctured / interleaved / mapped data
/// symbols. Output is baseband time-domain samples at params.sample_rate
/// with ~unit average power; length is frame_sample_count(...).
std::vector<cfloat> encode_frame(std::span<const std::uint8_t> psdu, const Mcs& mcs,
                                 const OfdmParams& params = {},
                                 std::uint8_t scrambler_seed = 0x5D);

/// One OFDM symbol (CP + fft_size samples) from 48 constellation points
/// and the pilot polarity for `symbol_index` (0 = SIGNAL).
std::vector<cfloat> build_data_symbol(std::span<const cfloat> points, std::size_t symbol_index,
                                      const OfdmParams& params);

}  // namespace sdr::wifi
