// SPDX-License-Identifier: Apache-2.0
#include <iostream>
#include <vector>

#include "commands.hpp"
#include "sdr/dsp/rng.hpp"
#include "sdr/io/events.hpp"
#include "sdr/io/iq_file.hpp"
#include "sdr/wifi/channel.hpp"
#include "sdr/wifi/crc32.hpp"
#include "sdr/wifi/encoder.hpp"

namespace flowsdr {

namespace {

const sdr::wifi::Mcs* mcs_by_name(const std::string& name) {
    for (const auto& m : sdr::wifi::Mcs::all())
        if (name == m.str()) return &m;
    return nullptr;
}

/// `len` total bytes: len-4 random payload bytes plus a valid FCS, so a
/// clean receive reports fcs_ok. (PSDUs shorter than 4 bytes would carry
/// no checksum; tx requires len >= 4.)
std::vector<std::uint8_t> random_psdu(sdr::dsp::Rng& rng, std::size_t len) {
    std::vector<std::uint8_t> payload(len - 4);
    for (std::size_t i = 0; i < payload.size(); ++i) {
        if (i % 8 == 0) {
            const std::uint64_t w = rng.next_u64();
            for (std::size_t b = 0; b < 8 && i + b < payload.size(); ++b)
                payload[i + b] = static_cast<std::uint8_t>(w >> (8 * b));
        }
    }
    return sdr::wifi::append_fcs(payload);
}

}  // namespace

int run_tx(const TxOptions& opt) {
    const auto* mcs = mcs_by_name(opt.mcs);
    if (!mcs) {
        std::cerr << "flowsdr tx: unknown mcs '" << opt.mcs << "' (try bpsk-1/2 .. qam64-3/4)\n";
        return kExitUsage;
    }
    if (opt.count > 0 && (opt.psdu_len < 4 || opt.psdu_len > 4095)) {
        std::cerr << "flowsdr tx: --len must be in 4..4095 (got " << opt.psdu_len << ")\n";
        return kExitUsage;
    }
    if (!(opt.sample_rate > 0.0)) {
        std::cerr << "flowsdr tx: --sample-rate must be positive\n";
        return kExitUsage;
    }

    sdr::wifi::OfdmParams params;
    params.sample_rate = opt.sample_rate;

    sdr::dsp::Rng payload_rng(opt.seed);
    std::vector<std::vector<std::uint8_t>> psdus;
    std::vector<sdr::cfloat> iq;
    for (std::size_t i = 0; i < opt.count; ++i) {
        psdus.push_back(random_psdu(payload_rng, opt.psdu_len));
        const auto frame = sdr::wifi::encode_frame(psdus.back(), *mcs, params);

        // Impair each frame on its own so the SNR calibration sees only
        // frame power, never the idle gap.
        sdr::wifi::ChannelConfig ch;
        ch.cfo_hz = opt.cfo_hz;
        ch.snr_db = opt.snr_db;
        ch.start_pad = opt.gap;
        ch.seed = opt.seed + 0x9E37 * (i + 1);
        ch.sample_rate = opt.sample_rate;
        const auto seg = sdr::wifi::apply_channel(frame, ch);
        iq.insert(iq.end(), seg.begin(), seg.end());
    }
    iq.insert(iq.end(), opt.gap, sdr::cfloat{});  // idle tail after the last frame

    const std::string manifest = opt.manifest.empty() ? opt.out + ".manifest" : opt.manifest;
    sdr::io::write_iq(opt.out, iq);
    sdr::io::IqSidecar meta;
    meta.sample_rate_hz = opt.sample_rate;
    meta.description = "802.11p " + std::string(mcs->str()) + ", " + std::to_string(opt.count) +
                       " frame(s), len " + std::to_string(opt.psdu_len) + ", seed " +
                       std::to_string(opt.seed);
    sdr::io::write_sidecar(sdr::io::sidecar_path(opt.out), meta);
    sdr::io::write_manifest(manifest, psdus);

    std::cout << "wrote " << iq.size() << " samples (" << opt.count << " frame(s)) to " << opt.out
              << "\n";
    return kExitOk;
}

}  // namespace flowsdr
