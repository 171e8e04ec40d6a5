// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sdr/dsp/blocks.hpp"

namespace sdr::dsp {

CosineSource::CosineSource(std::string name, double frequency_hz, double sample_rate_hz,
                           double amplitude)
    : Block(std::move(name)),
      cycles_per_sample_(frequency_hz / sample_rate_hz),
      amplitude_(amplitude) {
    if (!(sample_rate_hz > 0.0)) throw std::invalid_argument("sample rate must be positive");
    if (frequency_hz < 0.0 || frequency_hz >= sample_rate_hz / 2.0)
        throw std::invalid_argument("frequency must be in [0, sample_rate/2)");
    if (!(amplitude > 0.0)) throw std::invalid_argument("amplitude must be positive");
    add_output({"out", ItemKind::complex32()});
}

WorkStatus CosineSource::work(WorkContext& ctx) {
    auto out = ctx.out[0].as<cfloat>();
    for (auto& v : out) {
        // Reduce f/fs * n modulo 1 in double so the phase stays accurate
        // for arbitrarily long runs.
        const double frac = std::fmod(cycles_per_sample_ * static_cast<double>(n_), 1.0);
        const double phase = 2.0 * std::numbers::pi * frac;
        v = {static_cast<float>(amplitude_ * std::cos(phase)),
             static_cast<float>(amplitude_ * std::sin(phase))};
        ++n_;
    }
    ctx.out[0].produced = out.size();
    return WorkStatus::Ok;
}

VectorSource::VectorSource(std::string name, ItemKind kind, std::vector<std::byte> data)
    : Block(std::move(name)), item_bytes_(kind.bytes()), data_(std::move(data)) {
    if (data_.size() % item_bytes_ != 0)
        throw std::invalid_argument("source buffer is not a whole number of items");
    add_output({"out", kind});
}

WorkStatus VectorSource::work(WorkContext& ctx) {
    auto& out = ctx.out[0];
    const std::size_t space = out.items(item_bytes_);
    const std::size_t left = (data_.size() - offset_) / item_bytes_;
    const std::size_t n = std::min(space, left);
    if (n) std::memcpy(out.raw.data(), data_.data() + offset_, n * item_bytes_);
    offset_ += n * item_bytes_;
    out.produced = n;
    return offset_ == data_.size() ? WorkStatus::Done : WorkStatus::Ok;
}

VectorSink::VectorSink(std::string name, ItemKind kind)
    : Block(std::move(name)), item_bytes_(kind.bytes()) {
    add_input({"in", kind});
}

WorkStatus VectorSink::work(WorkContext& ctx) {
    auto& in = ctx.in[0];
    const std::size_t n = in.items(item_bytes_);
    data_.insert(data_.end(), in.raw.begin(), in.raw.begin() + static_cast<std::ptrdiff_t>(n * item_bytes_));
    in.consumed = n;
    return WorkStatus::Ok;
}

NullSink::NullSink(std::string name, ItemKind kind)
    : Block(std::move(name)), item_bytes_(kind.bytes()) {
    add_input({"in", kind});
}

WorkStatus NullSink::work(WorkContext& ctx) {
    const std::size_t n = ctx.in[0].items(item_bytes_);
    count_ += n;
    ctx.in[0].consumed = n;
    return WorkStatus::Ok;
}

}  // namespace sdr::dsp
