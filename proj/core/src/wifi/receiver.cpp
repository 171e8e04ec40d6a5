// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/receiver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "sdr/dsp/fft.hpp"
#include "sdr/wifi/convolutional.hpp"
#include "sdr/wifi/crc32.hpp"
#include "sdr/wifi/equalizer.hpp"
#include "sdr/wifi/interleaver.hpp"
#include "sdr/wifi/mapping.hpp"
#include "sdr/wifi/scrambler.hpp"
#include "sdr/wifi/signal_field.hpp"
#include "sdr/wifi/viterbi.hpp"

namespace sdr::wifi {

std::vector<std::uint8_t> decode_psdu(std::span<const float> soft, const Mcs& mcs,
                                      std::size_t psdu_len) {
    const std::size_t n_sym = n_data_symbols(psdu_len, mcs);
    const std::size_t n_bits = n_sym * mcs.n_dbps;
    const auto full = depuncture(std::vector<float>(soft.begin(), soft.end()), mcs.code_rate,
                                 2 * n_bits);
    // Padding follows the mid-stream tail, so the encoder does not end in
    // the zero state; decode to the best end state instead.
    auto bits = viterbi_decode(full, n_bits, false);
    descramble(bits);
    std::vector<std::uint8_t> psdu(psdu_len, 0);
    for (std::size_t i = 0; i < psdu_len; ++i)
        for (std::size_t b = 0; b < 8; ++b)
            psdu[i] |= static_cast<std::uint8_t>((bits[16 + 8 * i + b] & 1u) << b);
    return psdu;
}

namespace {

/// Copy `n` samples starting at `start` with CFO removal; the rotation
/// phase is referenced to absolute index `ref` so every extraction from
/// one frame shares a phase origin.
void extract(std::span<const cfloat> x, std::size_t start, std::size_t n, double cfo_hz,
             double fs, std::size_t ref, std::vector<cfloat>& dst) {
    dst.resize(n);
    const double w = -2.0 * std::numbers::pi * cfo_hz / fs;
    for (std::size_t m = 0; m < n; ++m) {
        const double ph = w * static_cast<double>(start + m - ref);
        dst[m] = x[start + m] * cfloat{static_cast<float>(std::cos(ph)),
                                       static_cast<float>(std::sin(ph))};
    }
}

}  // namespace

std::vector<FrameEvent> receive(std::span<const cfloat> samples, const ReceiverConfig& cfg) {
    std::vector<FrameEvent> events;
    const OfdmParams& p = cfg.params;
    const std::size_t n = p.fft_size;
    const auto triggers = detect_frames(samples, p, cfg.detect);
    const dsp::Fft fft({n, dsp::FftDirection::Forward, true});

    std::size_t resume_at = 0;
    std::vector<cfloat> buf, freq1, freq2;
    for (const auto& trig : triggers) {
        if (trig.index < resume_at) continue;

        // The plateau is met a couple dozen samples into the STF, so the
        // first LTF period starts roughly 150..180 samples ahead; search
        // a generous window around that.
        const std::size_t search_lo = trig.index + 140;
        const std::size_t search_hi = trig.index + 200;
        if (search_hi + 2 * n + p.symbol_len() > samples.size()) continue;

        const std::size_t region = search_hi + 2 * n - search_lo;
        extract(samples, search_lo, region, trig.coarse_cfo_hz, p.sample_rate, search_lo, buf);
        const auto al = align_ltf(buf, 0, search_hi - search_lo, p, cfg.align_min_quality);
        if (!al) {
            resume_at = trig.index + 80;
            continue;
        }
        const std::size_t d = search_lo + al->ltf_start;  // LTF period one, absolute
        const double cfo = trig.coarse_cfo_hz + al->fine_cfo_hz;

        extract(samples, d, n, cfo, p.sample_rate, d, buf);
        freq1 = fft.run(buf);
        extract(samples, d + n, n, cfo, p.sample_rate, d, buf);
        freq2 = fft.run(buf);
        auto est = estimate_channel(freq1, freq2, p);
        if (!est) {
            resume_at = trig.index + 80;
            continue;
        }

        // SIGNAL symbol follows the two LTF periods.
        const std::size_t sig_at = d + 2 * n + p.cp_len;
        if (sig_at + n > samples.size()) continue;
        extract(samples, sig_at, n, cfo, p.sample_rate, d, buf);
        freq1 = fft.run(buf);
        const auto sig_eq = equalize(freq1, *est, 0, p);
        if (!sig_eq) {
            resume_at = trig.index + 80;
            continue;
        }
        const auto sig_soft = demap_soft(std::span<const cfloat>(*sig_eq), Modulation::Bpsk);
        const auto sig = decode_signal(sig_soft);
        if (!sig) {
            resume_at = trig.index + 80;
            continue;
        }

        const Mcs& mcs = *sig->mcs;
        const std::size_t n_sym = n_data_symbols(sig->length, mcs);
        const std::size_t data_at = d + 2 * n;  // SIGNAL symbol start (CP included)
        const std::size_t frame_end = data_at + p.symbol_len() * (1 + n_sym);
        if (frame_end > samples.size()) {
            resume_at = trig.index + 80;
            continue;
        }

        std::vector<float> soft;
        soft.reserve(n_sym * mcs.n_cbps);
        bool ok = true;
        for (std::size_t s = 0; s < n_sym && ok; ++s) {
            const std::size_t at = data_at + p.symbol_len() * (1 + s) + p.cp_len;
            extract(samples, at, n, cfo, p.sample_rate, d, buf);
            freq1 = fft.run(buf);
            const auto eq = equalize(freq1, *est, s + 1, p);
            if (!eq) {
                ok = false;
                break;
            }
            const auto sym_soft = demap_soft(std::span<const cfloat>(*eq), mcs.modulation);
            const auto deint = deinterleave_soft(sym_soft, mcs);
            soft.insert(soft.end(), deint.begin(), deint.end());
        }
        if (!ok) {
            resume_at = trig.index + 80;
            continue;
        }

        FrameEvent ev;
        ev.psdu = decode_psdu(soft, mcs, sig->length);
        ev.mcs = &mcs;
        ev.fcs_ok = check_fcs(ev.psdu);
        ev.cfo_hz = cfo;
        const std::size_t preamble = p.stf_len + (p.ltf_len - 2 * n);  // up to LTF period one
        ev.start_index = d >= preamble ? d - preamble : 0;
        events.push_back(std::move(ev));
        resume_at = frame_end;
    }
    return events;
}

PerResult compute_per(const std::vector<std::vector<std::uint8_t>>& sent,
                      const std::vector<FrameEvent>& events) {
    PerResult r;
    r.detected = events.size();
    std::map<std::vector<std::uint8_t>, std::size_t> pool;
    for (const auto& s : sent) ++pool[s];
    std::size_t matched = 0;
    for (const auto& ev : events) {
        if (!ev.fcs_ok) continue;
        ++r.passed;
        auto it = pool.find(ev.psdu);
        if (it != pool.end() && it->second > 0) {
            --it->second;
            ++matched;
        }
    }
    r.per = sent.empty() ? 0.0
                         : 1.0 - static_cast<double>(matched) / static_cast<double>(sent.size());
    return r;
}

}  // namespace sdr::wifi
