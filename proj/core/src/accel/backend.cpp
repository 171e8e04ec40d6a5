// SPDX-License-Identifier: Apache-2.0
#include "sdr/accel/backend.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sdr::accel {

DeviceFftBackend::DeviceFftBackend(FftDevice& device, float full_scale)
    : device_(device), full_scale_(full_scale) {
    if (!(full_scale > 0.0f)) throw std::invalid_argument("full_scale must be positive");
}

bool DeviceFftBackend::supports(std::size_t n) const {
    return n >= 8 && n <= 2048 && (n & (n - 1)) == 0;
}

void DeviceFftBackend::transform(std::span<const cfloat> in, std::span<cfloat> out,
                                 dsp::FftDirection dir) {
    const std::size_t n = in.size();
    if (!supports(n)) throw DeviceError("unsupported transform size");
    if (out.size() != n) throw DeviceError("output span must match the transform size");

    std::uint32_t lg = 0;
    while ((std::size_t{1} << lg) < n) ++lg;
    const FftDeviceConfig cfg{dir, n, 0, default_scale_schedule(lg)};
    if (!cached_ || !(*cached_ == cfg)) {
        device_.configure(cfg);
        cached_ = cfg;
    }

    const auto fixed = quantize(in, full_scale_);
    auto completion = device_.submit(fixed);
    modeled_total_s_ += completion.modeled_time_s;

    // Undo the per-stage block scaling (total right shift S): the device
    // computed FFT/2^S forward, or N*ifft/2^S inverse.
    unsigned total_shift = 0;
    for (std::uint32_t s = 0; s < lg; ++s) total_shift += (cfg.scale_sched >> (2 * s)) & 0x3;
    double gain = static_cast<double>(full_scale_) * std::ldexp(1.0, static_cast<int>(total_shift));
    if (dir == dsp::FftDirection::Inverse) gain /= static_cast<double>(n);

    const auto floats = dequantize(completion.output, static_cast<float>(gain));
    std::copy(floats.begin(), floats.end(), out.begin());
}

std::unique_ptr<DeviceFftBackend> as_backend(FftDevice& device, float full_scale) {
    return std::make_unique<DeviceFftBackend>(device, full_scale);
}

}  // namespace sdr::accel
