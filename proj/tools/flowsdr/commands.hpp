// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace flowsdr {

// Exit-code discipline shared by every subcommand:
//   0 = ran to completion (even with zero frames decoded)
//   1 = usage error (bad flag value, unknown MCS, unsupported size)
//   2 = I/O or format error (unreadable file, malformed content)
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

struct TxOptions {
    std::string out;                 // IQ file; sidecar written next to it
    std::string manifest;            // defaults to "<out>.manifest"
    std::string mcs = "bpsk-1/2";
    std::size_t count = 10;
    std::size_t psdu_len = 200;      // includes the 4-byte FCS
    double snr_db = std::numeric_limits<double>::infinity();
    double cfo_hz = 0.0;
    std::uint64_t seed = 1;
    double sample_rate = 10e6;
    std::size_t gap = 1000;          // idle samples before each frame
};

struct RxOptions {
    std::string in;
    std::string events;              // optional JSONL output
    std::string profile;             // optional profiler JSON output
    std::string backend = "software";
    double sample_rate = 0.0;        // 0 = take from sidecar (or 10 MHz)
    std::size_t chunk = 4096;
    int workers = 1;
};

struct PerOptions {
    std::string manifest;
    std::string events;
};

struct DemoFirOptions {
    std::string out;                 // spectrum CSV
    double frequency_hz = 50e3;
    double sample_rate = 1e6;
    double amplitude = 0.5;
    double noise_stddev = 0.0;
    double cutoff_hz = 100e3;
    double transition_hz = 50e3;
    std::string backend = "software";
    double duration_s = 0.5;         // signal time: duration * sample_rate samples
    double throttle_rate = 0.0;      // items/s; 0 = no pacing
    std::uint64_t seed = 1;
    std::uint32_t fft_size = 512;
};

struct BenchFftOptions {
    std::string out;                 // optional CSV path ("" = stdout only)
    std::vector<std::uint32_t> sizes = {64, 256, 1024};
    std::size_t iterations = 200;
    std::uint64_t seed = 1;
};

int run_tx(const TxOptions& opt);
int run_rx(const RxOptions& opt);
int run_per(const PerOptions& opt);
int run_demo_fir(const DemoFirOptions& opt);
int run_bench_fft(const BenchFftOptions& opt);

}  // namespace flowsdr
