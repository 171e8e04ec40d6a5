// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/sync.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "sdr/wifi/preamble.hpp"

namespace sdr::wifi {

double coarse_cfo_from_autocorr(cfloat autocorr, double sample_rate) {
    return -std::arg(std::complex<double>(autocorr)) * sample_rate /
           (2.0 * std::numbers::pi * 16.0);
}

std::vector<Trigger> detect_frames(std::span<const cfloat> x, const OfdmParams& p,
                                   const DetectConfig& cfg) {
    std::vector<Trigger> out;
    const std::size_t lag = 16;
    const std::size_t w = cfg.window;
    if (x.size() < w + lag) return out;

    // Running sums over the correlation window; recomputed incrementally
    // in double to keep the sliding update stable.
    std::complex<double> a{};
    double power = 0.0;
    for (std::size_t k = 0; k < w; ++k) {
        a += std::complex<double>(x[k]) * std::conj(std::complex<double>(x[k + lag]));
        power += std::norm(std::complex<double>(x[k + lag]));
    }

    std::size_t streak = 0;
    std::size_t last_trigger = 0;
    bool armed = true;
    const std::size_t n_pos = x.size() - w - lag + 1;
    for (std::size_t n = 0;; ++n) {
        const double ratio = power > 0.0 ? std::abs(a) / power : 0.0;
        if (ratio > cfg.threshold) {
            ++streak;
            if (streak >= cfg.plateau && armed &&
                (out.empty() || n - last_trigger >= cfg.min_gap)) {
                Trigger t;
                t.index = n;
                t.autocorr = cfloat(a);
                t.coarse_cfo_hz = coarse_cfo_from_autocorr(t.autocorr, p.sample_rate);
                out.push_back(t);
                last_trigger = n;
                armed = false;
            }
        } else {
            streak = 0;
            armed = true;
        }

        if (n + 1 >= n_pos) break;
        a -= std::complex<double>(x[n]) * std::conj(std::complex<double>(x[n + lag]));
        a += std::complex<double>(x[n + w]) * std::conj(std::complex<double>(x[n + w + lag]));
        power -= std::norm(std::complex<double>(x[n + lag]));
        power += std::norm(std::complex<double>(x[n + w + lag]));
    }
    return out;
}

void correct_cfo(std::span<cfloat> x, double cfo_hz, double sample_rate, std::uint64_t n0) {
    if (cfo_hz == 0.0) return;
    const double w = -2.0 * std::numbers::pi * cfo_hz / sample_rate;
    for (std::size_t n = 0; n < x.size(); ++n) {
        const double ph = w * static_cast<double>(n0 + n);
        x[n] *= cfloat{static_cast<float>(std::cos(ph)), static_cast<float>(std::sin(ph))};
    }
}

std::optional<Alignment> align_ltf(std::span<const cfloat> x, std::size_t search_begin,
                                   std::size_t search_end, const OfdmParams& p,
                                   double min_quality) {
    const std::size_t n = p.fft_size;
    if (search_end > x.size() || search_begin >= search_end) return std::nullopt;
    // A candidate needs both periods plus lag-64 comparison data.
    if (search_end + 2 * n > x.size()) {
        if (x.size() < 2 * n) return std::nullopt;
        search_end = x.size() - 2 * n;
        if (search_begin >= search_end) return std::nullopt;
    }

    const auto ref = ltf_time_period(p);
    double e_ref = 0.0;
    for (const auto& v : ref) e_ref += static_cast<double>(std::norm(v));

    auto norm_corr = [&](std::size_t d) {
        std::complex<double> c{};
        double e = 0.0;
        for (std::size_t m = 0; m < n; ++m) {
            const std::complex<double> s(x[d + m]);
            c += s * std::conj(std::complex<double>(ref[m]));
            e += std::norm(s);
        }
        const double denom = std::sqrt(e * e_ref);
        return denom > 0.0 ? std::abs(c) / denom : 0.0;
    };

    std::size_t best_d = search_begin;
    double best_score = -1.0;
    for (std::size_t d = search_begin; d < search_end; ++d) {
        const double score = norm_corr(d) + norm_corr(d + n);
        if (score > best_score) {
            best_score = score;
            best_d = d;
        }
    }

    Alignment al;
    al.ltf_start = best_d;
    al.quality = best_score / 2.0;
    if (al.quality < min_quality) return std::nullopt;

    std::complex<double> s{};
    for (std::size_t m = 0; m < n; ++m)
        s += std::complex<double>(x[best_d + m]) *
             std::conj(std::complex<double>(x[best_d + m + n]));
    al.fine_cfo_hz = -std::arg(s) * p.sample_rate / (2.0 * std::numbers::pi * static_cast<double>(n));
    return al;
}

}  // namespace sdr::wifi
