// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sdr/types.hpp"

namespace sdr::io {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Capture metadata stored next to the raw samples.
struct IqSidecar {
    double sample_rate_hz = 10e6;
    double center_freq_hz = 0.0;
    std::string description;
};

/// Raw IQ capture: interleaved 32-bit little-endian floats, I then Q per
/// complex sample. Readers reject files whose byte length is not a
/// multiple of 8 or that contain non-finite values.
void write_iq(const std::string& path, std::span<const cfloat> samples);
std::vector<cfloat> read_iq(const std::string& path);

/// "<iq path>.json"
std::string sidecar_path(const std::string& iq_path);
void write_sidecar(const std::string& path, const IqSidecar& meta);
IqSidecar read_sidecar(const std::string& path);

}  // namespace sdr::io
