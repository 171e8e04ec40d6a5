// SPDX-License-Identifier: Apache-2.0
//
// flowsdr — batch front end for the flow-graph SDR engine.
//
//   flowsdr tx        generate an IQ capture of 802.11p frames (+ manifest)
//   flowsdr rx        decode an IQ capture with the receiver flow graph
//   flowsdr per       packet error rate from a manifest and an event file
//   flowsdr demo-fir  cosine -> noise -> throttle -> FIR -> FFT spectrum CSV
//   flowsdr bench-fft compare software and device FFT backends
#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"flow-graph SDR engine: 802.11p transmit/receive, FIR demo, FFT benchmarking"};
    app.require_subcommand(1);

    flowsdr::TxOptions tx;
    auto* cmd_tx = app.add_subcommand("tx", "Generate an IQ file of 802.11p frames");
    cmd_tx->add_option("--out", tx.out, "Output IQ file (interleaved float32 LE)")->required();
    cmd_tx->add_option("--manifest", tx.manifest, "Sent-PSDU manifest path (default <out>.manifest)");
    cmd_tx->add_option("--mcs", tx.mcs, "Modulation/rate, e.g. bpsk-1/2, qam64-3/4");
    cmd_tx->add_option("--count", tx.count, "Number of frames");
    cmd_tx->add_option("--len", tx.psdu_len, "PSDU length in bytes, FCS included (4..4095)");
    cmd_tx->add_option("--snr-db", tx.snr_db, "Add white noise at this SNR (default: none)");
    cmd_tx->add_option("--cfo-hz", tx.cfo_hz, "Carrier frequency offset");
    cmd_tx->add_option("--seed", tx.seed, "PRNG seed (payloads and noise)");
    cmd_tx->add_option("--sample-rate", tx.sample_rate, "Sample rate in Hz");
    cmd_tx->add_option("--gap", tx.gap, "Idle samples before each frame");

    flowsdr::RxOptions rx;
    auto* cmd_rx = app.add_subcommand("rx", "Decode an IQ file with the receiver flow graph");
    cmd_rx->add_option("--in", rx.in, "Input IQ file")->required();
    cmd_rx->add_option("--events", rx.events, "Write frame events as JSON lines");
    cmd_rx->add_option("--profile", rx.profile, "Write a profiler report (JSON)");
    cmd_rx->add_option("--backend", rx.backend, "FFT engine: software | device")
        ->check(CLI::IsMember({"software", "device"}));
    cmd_rx->add_option("--sample-rate", rx.sample_rate, "Override sidecar sample rate");
    cmd_rx->add_option("--chunk", rx.chunk, "Scheduler per-activation item cap");
    cmd_rx->add_option("--workers", rx.workers, "Scheduler worker threads")
        ->check(CLI::PositiveNumber);

    flowsdr::PerOptions per;
    auto* cmd_per = app.add_subcommand("per", "Packet error rate from manifest + events");
    cmd_per->add_option("--manifest", per.manifest, "Sent-PSDU manifest")->required();
    cmd_per->add_option("--events", per.events, "Receiver event file (JSON lines)")->required();

    flowsdr::DemoFirOptions demo;
    auto* cmd_demo = app.add_subcommand(
        "demo-fir", "Tone + noise through a low-pass FIR; averaged FFT spectrum as CSV");
    cmd_demo->add_option("--out", demo.out, "Spectrum CSV output")->required();
    cmd_demo->add_option("--frequency", demo.frequency_hz, "Tone frequency in Hz");
    cmd_demo->add_option("--sample-rate", demo.sample_rate, "Sample rate in Hz");
    cmd_demo->add_option("--amplitude", demo.amplitude, "Tone amplitude");
    cmd_demo->add_option("--noise-stddev", demo.noise_stddev, "Per-component noise deviation");
    cmd_demo->add_option("--cutoff", demo.cutoff_hz, "Low-pass cutoff in Hz");
    cmd_demo->add_option("--transition", demo.transition_hz, "Transition width in Hz");
    cmd_demo->add_option("--backend", demo.backend, "FFT engine: software | device")
        ->check(CLI::IsMember({"software", "device"}));
    cmd_demo->add_option("--duration", demo.duration_s, "Signal duration in seconds");
    cmd_demo->add_option("--throttle-rate", demo.throttle_rate,
                         "Pace the stream at this many samples/s (0 = no pacing)");
    cmd_demo->add_option("--seed", demo.seed, "Noise seed");
    cmd_demo->add_option("--fft-size", demo.fft_size, "Spectrum FFT size (power of two)");

    flowsdr::BenchFftOptions bench;
    auto* cmd_bench =
        app.add_subcommand("bench-fft", "Compare software and device FFT backends");
    cmd_bench->add_option("--out", bench.out, "Also write the CSV table to this path");
    cmd_bench->add_option("--sizes", bench.sizes, "Transform sizes (powers of two, 8..2048)");
    cmd_bench->add_option("--iterations", bench.iterations, "Transforms per size/backend");
    cmd_bench->add_option("--seed", bench.seed, "Input-vector seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? flowsdr::kExitOk : flowsdr::kExitUsage;
    }

    try {
        if (cmd_tx->parsed()) return flowsdr::run_tx(tx);
        if (cmd_rx->parsed()) return flowsdr::run_rx(rx);
        if (cmd_per->parsed()) return flowsdr::run_per(per);
        if (cmd_demo->parsed()) return flowsdr::run_demo_fir(demo);
        if (cmd_bench->parsed()) return flowsdr::run_bench_fft(bench);
    } catch (const std::exception& e) {
        std::cerr << "flowsdr: " << e.what() << "\n";
        return flowsdr::kExitIo;
    }
    return flowsdr::kExitUsage;
}
