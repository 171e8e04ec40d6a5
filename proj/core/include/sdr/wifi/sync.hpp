// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sdr/types.hpp"
#include "sdr/wifi/params.hpp"

namespace sdr::wifi {

/// Preamble detector settings. The short training field repeats every 16
/// samples, so the lag-16 autocorrelation over `window` samples,
/// normalized by the lagged window's power, sits at 1.0 on an ideal STF.
struct DetectConfig {
    double threshold = 0.9;
    std::size_t plateau = 16;   // consecutive above-threshold samples required
    std::size_t window = 48;    // correlation window length
    std::size_t min_gap = 320;  // refractory gap between triggers
};

/// A detection: `index` is the sample where the plateau requirement was
/// met (a few samples into the STF); `autocorr` is the raw lag-16
/// correlation there, whose angle yields the coarse CFO.
struct Trigger {
    std::size_t index = 0;
    cfloat autocorr{};
    double coarse_cfo_hz = 0.0;
};

double coarse_cfo_from_autocorr(cfloat autocorr, double sample_rate);

std::vector<Trigger> detect_frames(std::span<const cfloat> x, const OfdmParams& p,
                                   const DetectConfig& cfg = {});

/// In-place derotation y[n] = x[n] * exp(-j 2 pi cfo (n0+n) / fs).
void correct_cfo(std::span<cfloat> x, double cfo_hz, double sample_rate, std::uint64_t n0 = 0);

/// Long-training-field alignment: cross-correlates the known 64-sample
/// period over [search_begin, search_end] and scores each candidate by
/// the sum of the two period correlations. `fine_cfo_hz` comes from the
/// lag-64 phase between the two periods.
struct Alignment {
    std::size_t ltf_start = 0;  // first sample of LTF period one
    double fine_cfo_hz = 0.0;
    double quality = 0.0;  // mean normalized correlation of the two periods, <= 1
};

std::optional<Alignment> align_ltf(std::span<const cfloat> x, std::size_t search_begin,
                                   std::size_t search_end, const OfdmParams& p,
                                   double min_quality = 0.5);

}  // namespace sdr::wifi
