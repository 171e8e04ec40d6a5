// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>

#include "sdr/accel/device.hpp"
#include "sdr/dsp/fft.hpp"

namespace sdr::accel {

/// Adapts an FftDevice to the software transform seam: quantize in,
/// configure (cached across same-shaped jobs), submit, dequantize out
/// with the block-scaling compensated, so results are directly
/// comparable to the float transform. `full_scale` sets the quantizer
/// headroom: inputs with |component| <= full_scale survive unclipped
/// (larger head room costs dynamic range). Accumulated modeled offload
/// time is exposed through modeled_time_s() for profiling.
class DeviceFftBackend : public dsp::FftBackend {
public:
    explicit DeviceFftBackend(FftDevice& device, float full_scale = 1.0f);

    void transform(std::span<const cfloat> in, std::span<cfloat> out,
                   dsp::FftDirection dir) override;
    bool supports(std::size_t n) const override;
    double modeled_time_s() const override { return modeled_total_s_; }
    const char* name() const override { return "device"; }

private:
    FftDevice& device_;
    float full_scale_;
    double modeled_total_s_ = 0.0;
    std::optional<FftDeviceConfig> cached_;
};

/// Convenience factory for the common one-device case.
std::unique_ptr<DeviceFftBackend> as_backend(FftDevice& device, float full_scale = 1.0f);

}  // namespace sdr::accel
