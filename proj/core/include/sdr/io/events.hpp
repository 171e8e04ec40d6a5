// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sdr/io/iq_file.hpp"
#include "sdr/wifi/receiver.hpp"

namespace sdr::io {

/// Lowercase hex encoding, two digits per byte, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);
/// Inverse of to_hex. Throws IoError on odd length or non-hex digits.
std::vector<std::uint8_t> from_hex(const std::string& hex);

/// Manifest: one hex-encoded PSDU per line (the exact bytes given to the
/// transmitter, FCS included). Blank lines are ignored on read.
void write_manifest(const std::string& path, const std::vector<std::vector<std::uint8_t>>& psdus);
std::vector<std::vector<std::uint8_t>> read_manifest(const std::string& path);

/// One frame event as a single-line JSON object with a fixed key order:
/// {"start_index":..,"mcs":"..","mcs_index":..,"length":..,
///  "fcs_ok":..,"cfo_hz":..,"psdu":".."}
/// The fixed order and shortest-round-trip number formatting make event
/// files byte-comparable across runs.
std::string event_to_json(const wifi::FrameEvent& ev);
/// Parses a single event line; `mcs` is resolved from `mcs_index`.
/// Throws IoError on malformed input.
wifi::FrameEvent event_from_json(const std::string& line);

/// Events file: one JSON object per line, in event order.
void write_events(const std::string& path, std::span<const wifi::FrameEvent> events);
std::vector<wifi::FrameEvent> read_events(const std::string& path);

}  // namespace sdr::io
