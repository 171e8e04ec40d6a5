// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sdr/types.hpp"

namespace sdr::dsp {

enum class FftDirection { Forward, Inverse };

/// Transform description. Forward computes
///   X[k] = sum_n x[n] exp(-j 2 pi k n / N)
/// and is unscaled; inverse uses +j and multiplies by 1/N when
/// `scale_inverse` is set (the default, so ifft(fft(x)) == x).
struct FftPlan {
    std::size_t n = 0;
    FftDirection direction = FftDirection::Forward;
    bool scale_inverse = true;
};

/// Iterative radix-2 transform with a twiddle table precomputed per plan.
class Fft {
public:
    explicit Fft(FftPlan plan);

    const FftPlan& plan() const { return plan_; }

    /// `in` and `out` must both have plan().n elements; they may alias
    /// exactly (in-place) but must not partially overlap.
    void run(std::span<const cfloat> in, std::span<cfloat> out) const;

    std::vector<cfloat> run(const std::vector<cfloat>& x) const;

private:
    FftPlan plan_;
    std::vector<cfloat> twiddle_;       // exp(-j 2 pi k / N), k < N/2
    std::vector<std::uint32_t> rev_;    // bit-reversal permutation
};

std::vector<cfloat> fft_forward(const std::vector<cfloat>& x);
std::vector<cfloat> fft_inverse(const std::vector<cfloat>& x);

/// Interchangeable transform engine. Implementations must agree with the
/// reference DFT within their declared tolerance; `modeled_time_s` is
/// advisory cost metadata (a hardware model's accumulated offload time)
/// surfaced through block metrics.
class FftBackend {
public:
    virtual ~FftBackend() = default;
    virtual void transform(std::span<const cfloat> in, std::span<cfloat> out,
                           FftDirection dir) = 0;
    virtual bool supports(std::size_t n) const = 0;
    virtual double modeled_time_s() const { return 0.0; }
    virtual const char* name() const = 0;
};

/// Plain in-process float transform (plans cached per size/direction).
class SoftwareFftBackend : public FftBackend {
public:
    void transform(std::span<const cfloat> in, std::span<cfloat> out, FftDirection dir) override;
    bool supports(std::size_t n) const override { return n >= 2 && (n & (n - 1)) == 0; }
    const char* name() const override { return "software"; }

private:
    std::vector<std::unique_ptr<Fft>> plans_;
};

}  // namespace sdr::dsp
