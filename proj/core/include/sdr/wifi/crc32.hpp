// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sdr::wifi {

/// CRC-32 (reflected 0x04C11DB7, init and final XOR 0xFFFFFFFF); the
/// common Ethernet/FCS polynomial. crc32("123456789") == 0xCBF43926.
std::uint32_t crc32(std::span<const std::uint8_t> data);

/// Append the 4-byte FCS (little-endian CRC-32) to a payload.
std::vector<std::uint8_t> append_fcs(std::span<const std::uint8_t> payload);

/// True when the trailing 4 bytes are the CRC-32 of the rest. PSDUs
/// shorter than 4 bytes carry no checksum and are accepted as-is.
bool check_fcs(std::span<const std::uint8_t> psdu);

}  // namespace sdr::wifi
