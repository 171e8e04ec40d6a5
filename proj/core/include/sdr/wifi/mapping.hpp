// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sdr/types.hpp"
#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Gray constellation mapping with unit average energy. Convention fixed
/// across the codebase: bit 0 maps to the positive side of each axis, so
/// a positive soft metric always means bit 0.
///
/// Per-axis grids before normalization (first bit listed first):
///   BPSK  0 -> +1, 1 -> -1
///   QPSK  per axis as BPSK, I bit first; 1/sqrt(2)
///   QAM16 00 -> +3, 01 -> +1, 11 -> -1, 10 -> -3; 1/sqrt(10)
///   QAM64 000 -> +7, 001 -> +5, 011 -> +3, 010 -> +1,
///         110 -> -1, 111 -> -3, 101 -> -5, 100 -> -7; 1/sqrt(42)
std::vector<cfloat> map_bits(std::span<const std::uint8_t> bits, Modulation mod);

/// Per-bit soft metrics in grid units; sign is the hard decision
/// (positive -> bit 0, zero -> no confidence). Output length is
/// points.size() * bits-per-point.
std::vector<float> demap_soft(std::span<const cfloat> points, Modulation mod);

inline std::uint8_t hard_bit(float soft) { return soft > 0.0f ? 0 : 1; }

std::size_t bits_per_point(Modulation mod);

}  // namespace sdr::wifi
