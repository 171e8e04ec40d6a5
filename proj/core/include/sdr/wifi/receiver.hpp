// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdr/types.hpp"
#include "sdr/wifi/params.hpp"
#include "sdr/wifi/sync.hpp"

namespace sdr::wifi {

/// One decoded (or attempted) frame.
struct FrameEvent {
    std::vector<std::uint8_t> psdu;
    const Mcs* mcs = nullptr;
    bool fcs_ok = false;
    double cfo_hz = 0.0;          // total estimated offset (coarse + fine)
    std::size_t start_index = 0;  // estimated first STF sample
};

struct ReceiverConfig {
    OfdmParams params{};
    DetectConfig detect{};
    double align_min_quality = 0.5;
};

/// Buffer-level receiver: detect, synchronize, estimate, equalize, and
/// decode every frame in `samples`. Undecodable regions contribute
/// nothing; events are ordered by start index.
std::vector<FrameEvent> receive(std::span<const cfloat> samples, const ReceiverConfig& cfg = {});

/// Decode the data field from per-symbol deinterleaved soft bits
/// (punctured domain, n_data_symbols * n_cbps values): depuncture,
/// Viterbi, descramble, extract the PSDU.
std::vector<std::uint8_t> decode_psdu(std::span<const float> soft, const Mcs& mcs,
                                      std::size_t psdu_len);

struct PerResult {
    double per = 1.0;
    std::size_t detected = 0;  // events seen
    std::size_t passed = 0;    // events with fcs_ok
};

/// Packet error rate: fraction of sent PSDUs not matched exactly by an
/// fcs_ok event. Each event consumes at most one sent entry.
PerResult compute_per(const std::vector<std::vector<std::uint8_t>>& sent,
                      const std::vector<FrameEvent>& events);

}  // namespace sdr::wifi
