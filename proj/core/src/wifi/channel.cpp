// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sdr/dsp/rng.hpp"

namespace sdr::wifi {

std::vector<cfloat> apply_channel(std::span<const cfloat> samples, const ChannelConfig& cfg) {
    if (cfg.taps.empty()) throw std::invalid_argument("channel taps must be non-empty");
    if (std::isnan(cfg.snr_db)) throw std::invalid_argument("snr must not be NaN");

    const std::size_t sig_len = samples.empty() ? 0 : samples.size() + cfg.taps.size() - 1;
    std::vector<cfloat> sig(sig_len, cfloat{});
    for (std::size_t n = 0; n < samples.size(); ++n)
        for (std::size_t k = 0; k < cfg.taps.size(); ++k) sig[n + k] += samples[n] * cfg.taps[k];

    if (cfg.cfo_hz != 0.0) {
        const double w = 2.0 * std::numbers::pi * cfg.cfo_hz / cfg.sample_rate;
        for (std::size_t n = 0; n < sig.size(); ++n) {
            const double ph = w * static_cast<double>(n);
            sig[n] *= cfloat{static_cast<float>(std::cos(ph)), static_cast<float>(std::sin(ph))};
        }
    }

    std::vector<cfloat> out(cfg.start_pad + sig.size(), cfloat{});
    std::copy(sig.begin(), sig.end(), out.begin() + static_cast<std::ptrdiff_t>(cfg.start_pad));

    if (std::isfinite(cfg.snr_db) && !sig.empty()) {
        double p_sig = 0.0;
        for (const auto& v : sig) p_sig += static_cast<double>(std::norm(v));
        p_sig /= static_cast<double>(sig.size());
        const double snr = std::pow(10.0, cfg.snr_db / 10.0);
        const double sigma = std::sqrt(p_sig / (2.0 * snr));  // per component
        dsp::Rng rng(cfg.seed);
        for (auto& v : out) {
            double z0, z1;
            rng.gaussian_pair(z0, z1);
            v += cfloat{static_cast<float>(sigma * z0), static_cast<float>(sigma * z1)};
        }
    }
    return out;
}

}  // namespace sdr::wifi
