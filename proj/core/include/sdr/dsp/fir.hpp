// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "sdr/block.hpp"
#include "sdr/types.hpp"

namespace sdr::dsp {

/// Finite-impulse-response coefficients, fixed after construction.
struct FirTaps {
    std::vector<float> coefficients;

    explicit FirTaps(std::vector<float> coeffs);
    std::size_t size() const { return coefficients.size(); }
};

/// Windowed-sinc (Hamming) low-pass design. Length is odd, chosen from
/// the transition width; taps are normalized to unity DC gain.
FirTaps design_lowpass(double cutoff_hz, double transition_hz, double sample_rate_hz);

/// Streaming convolution, complex samples:
///   y[n] = sum_k taps[k] * x[n-k],  x[m] = 0 for m < 0.
/// The delay line persists across work calls, so any chunking of the
/// input yields exactly the same output as a single-shot pass.
class FirFilter : public Block {
public:
    FirFilter(std::string name, FirTaps taps);
    WorkStatus work(WorkContext& ctx) override;

    /// One-shot convenience over a whole buffer (fresh zero state).
    static std::vector<cfloat> apply(const FirTaps& taps, std::span<const cfloat> x);

private:
    std::vector<float> taps_;
    std::vector<cfloat> delay_;       // circular, taps_.size() entries
    std::size_t pos_ = 0;
};

/// Same filter over 32-bit integer samples. The float accumulator is
/// rounded to nearest and saturated to the int32 range (the integer
/// convention is not standardized; this one round-trips cleanly with
/// int_to_float/float_to_int).
class FirFilterInt : public Block {
public:
    FirFilterInt(std::string name, FirTaps taps);
    WorkStatus work(WorkContext& ctx) override;

private:
    std::vector<float> taps_;
    std::vector<double> delay_;
    std::size_t pos_ = 0;
};

}  // namespace sdr::dsp
