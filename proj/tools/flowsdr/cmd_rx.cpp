// SPDX-License-Identifier: Apache-2.0
#include <fstream>
#include <iostream>
#include <memory>

#include "commands.hpp"
#include "sdr/accel/backend.hpp"
#include "sdr/accel/device.hpp"
#include "sdr/dsp/blocks.hpp"
#include "sdr/flow_graph.hpp"
#include "sdr/io/events.hpp"
#include "sdr/io/iq_file.hpp"
#include "sdr/profiler/report.hpp"
#include "sdr/wifi/rx_blocks.hpp"

namespace flowsdr {

int run_rx(const RxOptions& opt) {
    const auto samples = sdr::io::read_iq(opt.in);

    double fs = opt.sample_rate;
    if (fs <= 0.0) {
        fs = 10e6;
        try {
            fs = sdr::io::read_sidecar(sdr::io::sidecar_path(opt.in)).sample_rate_hz;
        } catch (const sdr::io::IoError&) {
            // No sidecar: keep the 10 MHz default.
        }
    }

    // Backends live outside the graph; borrowed by the FFT stage.
    sdr::accel::FftDevice device;
    std::unique_ptr<sdr::dsp::FftBackend> backend;
    if (opt.backend == "device") {
        // 4.0 full scale leaves headroom above the unit-power frames so
        // channel-boosted samples do not clip in the Q1.15 datapath.
        backend = sdr::accel::as_backend(device, 4.0f);
    } else {
        backend = std::make_unique<sdr::dsp::SoftwareFftBackend>();
    }

    sdr::FlowGraph g;
    auto src = g.emplace<sdr::dsp::VectorSource>("capture", sdr::ItemKind::complex32(),
                                                 sdr::dsp::VectorSource::pack(samples));
    sdr::wifi::ReceiverGraphOptions ropt;
    ropt.rx.params.sample_rate = fs;
    ropt.separate_fft_stage = true;
    ropt.fft_backend = backend.get();
    auto chain = sdr::wifi::build_receiver_graph(g, src, 0, ropt);

    if (!g.validate().runnable) {
        std::cerr << "flowsdr rx: receiver graph failed validation\n";
        return kExitIo;
    }

    sdr::RunOptions run_opts;
    run_opts.chunk_items = opt.chunk;
    run_opts.workers = opt.workers;
    run_opts.profiling = !opt.profile.empty();
    const auto run = g.run(run_opts);

    const auto& events = chain.sink->events();
    for (const auto& ev : events) {
        std::cout << ev.start_index << " " << (ev.mcs ? ev.mcs->str() : "unknown") << " "
                  << ev.psdu.size() << " " << (ev.fcs_ok ? 1 : 0) << " " << sdr::io::to_hex(ev.psdu)
                  << "\n";
    }
    std::cerr << "decoded " << events.size() << " frame(s) from " << samples.size()
              << " samples\n";

    if (!opt.events.empty()) sdr::io::write_events(opt.events, events);
    if (!opt.profile.empty()) {
        std::ofstream f(opt.profile, std::ios::trunc);
        if (!f) {
            std::cerr << "flowsdr rx: cannot write " << opt.profile << "\n";
            return kExitIo;
        }
        f << sdr::profiler::export_json(sdr::profiler::make_report(run)) << "\n";
    }
    return kExitOk;
}

}  // namespace flowsdr
