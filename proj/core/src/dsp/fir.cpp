// SPDX-License-Identifier: Apache-2.0
#include "sdr/dsp/fir.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace sdr::dsp {

FirTaps::FirTaps(std::vector<float> coeffs) : coefficients(std::move(coeffs)) {
    if (coefficients.empty()) throw std::invalid_argument("FIR taps must not be empty");
    for (float c : coefficients)
        if (!std::isfinite(c)) throw std::invalid_argument("FIR taps must be finite");
}

FirTaps design_lowpass(double cutoff_hz, double transition_hz, double sample_rate_hz) {
    if (!(cutoff_hz > 0.0) || !(transition_hz > 0.0))
        throw std::invalid_argument("cutoff and transition must be positive");
    if (!(cutoff_hz + transition_hz < sample_rate_hz / 2.0))
        throw std::invalid_argument("cutoff + transition must stay below Nyquist");

    // Hamming window: transition width ~= 3.3 / L (normalized frequency).
    const double df = transition_hz / sample_rate_hz;
    std::size_t length = static_cast<std::size_t>(std::ceil(3.3 / df));
    if (length % 2 == 0) ++length;
    if (length < 3) length = 3;

    const double fc = cutoff_hz / sample_rate_hz;  // cycles/sample
    const std::size_t mid = length / 2;
    std::vector<float> taps(length);
    double sum = 0.0;
    for (std::size_t k = 0; k < length; ++k) {
        const double m = static_cast<double>(k) - static_cast<double>(mid);
        const double x = 2.0 * fc * m;
        const double sinc = m == 0.0 ? 1.0 : std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
        const double w =
            0.54 - 0.46 * std::cos(2.0 * std::numbers::pi * static_cast<double>(k) /
                                   static_cast<double>(length - 1));
        const double h = 2.0 * fc * sinc * w;
        taps[k] = static_cast<float>(h);
        sum += h;
    }
    for (auto& t : taps) t = static_cast<float>(static_cast<double>(t) / sum);
    return FirTaps(std::move(taps));
}

FirFilter::FirFilter(std::string name, FirTaps taps)
    : Block(std::move(name)), taps_(std::move(taps.coefficients)), delay_(taps_.size(), cfloat{}) {
    add_input({"in", ItemKind::complex32()});
    add_output({"out", ItemKind::complex32()});
}

WorkStatus FirFilter::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<cfloat>();
    auto out = ctx.out[0].as<cfloat>();
    const std::size_t n = std::min(in.size(), out.size());
    const std::size_t k_count = taps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        delay_[pos_] = in[i];
        cfloat acc{};
        for (std::size_t k = 0; k < k_count; ++k)
            acc += taps_[k] * delay_[(pos_ + k_count - k) % k_count];
        out[i] = acc;
        pos_ = (pos_ + 1) % k_count;
    }
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

std::vector<cfloat> FirFilter::apply(const FirTaps& taps, std::span<const cfloat> x) {
    FirFilter f("fir", taps);
    std::vector<cfloat> y(x.size());
    InputWindow iw{std::as_bytes(x), true, 0};
    OutputWindow ow{std::as_writable_bytes(std::span<cfloat>(y)), 0};
    WorkContext ctx{{&iw, 1}, {&ow, 1}};
    f.work(ctx);
    return y;
}

FirFilterInt::FirFilterInt(std::string name, FirTaps taps)
    : Block(std::move(name)), taps_(std::move(taps.coefficients)), delay_(taps_.size(), 0.0) {
    add_input({"in", ItemKind::int32()});
    add_output({"out", ItemKind::int32()});
}

WorkStatus FirFilterInt::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<std::int32_t>();
    auto out = ctx.out[0].as<std::int32_t>();
    const std::size_t n = std::min(in.size(), out.size());
    const std::size_t k_count = taps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        delay_[pos_] = static_cast<double>(in[i]);
        double acc = 0.0;
        for (std::size_t k = 0; k < k_count; ++k)
            acc += static_cast<double>(taps_[k]) * delay_[(pos_ + k_count - k) % k_count];
        const double r = std::nearbyint(acc);
        const double lim = std::clamp(r, -2147483648.0, 2147483647.0);
        out[i] = static_cast<std::int32_t>(lim);
        pos_ = (pos_ + 1) % k_count;
    }
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

}  // namespace sdr::dsp
