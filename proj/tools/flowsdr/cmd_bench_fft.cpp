// SPDX-License-Identifier: Apache-2.0
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

#include "commands.hpp"
#include "sdr/accel/backend.hpp"
#include "sdr/accel/device.hpp"
#include "sdr/dsp/fft.hpp"
#include "sdr/dsp/rng.hpp"

namespace flowsdr {

namespace {

/// O(N^2) reference transform used only as the error oracle.
std::vector<sdr::cfloat> naive_dft(std::span<const sdr::cfloat> x) {
    const std::size_t n = x.size();
    std::vector<sdr::cfloat> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{};
        for (std::size_t m = 0; m < n; ++m) {
            const double ph = -2.0 * std::numbers::pi * static_cast<double>(k) *
                              static_cast<double>(m) / static_cast<double>(n);
            acc += std::complex<double>(x[m]) * std::polar(1.0, ph);
        }
        out[k] = {static_cast<float>(acc.real()), static_cast<float>(acc.imag())};
    }
    return out;
}

/// Inputs bounded to |component| <= 0.45 so both engines are exercised in
/// the device's clean operating region.
std::vector<sdr::cfloat> random_vector(sdr::dsp::Rng& rng, std::size_t n) {
    std::vector<sdr::cfloat> v(n);
    for (auto& s : v)
        s = {static_cast<float>(0.9 * (rng.uniform() - 0.5)),
             static_cast<float>(0.9 * (rng.uniform() - 0.5))};
    return v;
}

struct Row {
    std::size_t n;
    const char* backend;
    double mean_time_s;
    double modeled_offload_s;  // per transform; 0 for the software engine
    double max_error;
};

}  // namespace

int run_bench_fft(const BenchFftOptions& opt) {
    for (auto n : opt.sizes) {
        if (n < 8 || n > 2048 || (n & (n - 1)) != 0) {
            std::cerr << "flowsdr bench-fft: unsupported size " << n
                      << " (need a power of two in 8..2048)\n";
            return kExitUsage;
        }
    }
    if (opt.iterations == 0) {
        std::cerr << "flowsdr bench-fft: --iterations must be positive\n";
        return kExitUsage;
    }

    std::vector<Row> rows;
    for (auto n : opt.sizes) {
        // A fixed pool of distinct inputs, reused round-robin while timing.
        sdr::dsp::Rng rng(opt.seed + n);
        constexpr std::size_t kPool = 16;
        std::vector<std::vector<sdr::cfloat>> inputs;
        std::vector<std::vector<sdr::cfloat>> oracle;
        for (std::size_t i = 0; i < kPool; ++i) {
            inputs.push_back(random_vector(rng, n));
            oracle.push_back(naive_dft(inputs.back()));
        }

        sdr::dsp::SoftwareFftBackend sw;
        sdr::accel::FftDevice device;
        sdr::accel::DeviceFftBackend dev(device, 1.0f);
        for (sdr::dsp::FftBackend* backend : {static_cast<sdr::dsp::FftBackend*>(&sw),
                                              static_cast<sdr::dsp::FftBackend*>(&dev)}) {
            std::vector<sdr::cfloat> out(n);
            const double modeled_before = backend->modeled_time_s();
            const auto t0 = std::chrono::steady_clock::now();
            for (std::size_t it = 0; it < opt.iterations; ++it)
                backend->transform(inputs[it % kPool], out, sdr::dsp::FftDirection::Forward);
            const auto t1 = std::chrono::steady_clock::now();
            const double mean =
                std::chrono::duration<double>(t1 - t0).count() / static_cast<double>(opt.iterations);
            const double modeled = (backend->modeled_time_s() - modeled_before) /
                                   static_cast<double>(opt.iterations);

            double max_err = 0.0;
            for (std::size_t i = 0; i < kPool; ++i) {
                backend->transform(inputs[i], out, sdr::dsp::FftDirection::Forward);
                for (std::size_t k = 0; k < n; ++k)
                    max_err = std::max(max_err, static_cast<double>(std::abs(out[k] - oracle[i][k])));
            }
            rows.push_back({n, backend->name(), mean, modeled, max_err});
        }
    }

    std::ostringstream csv;
    csv << "n,backend,mean_time_s,modeled_offload_s,max_error\n";
    for (const auto& r : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%zu,%s,%.9e,%.9e,%.9e\n", r.n, r.backend, r.mean_time_s,
                      r.modeled_offload_s, r.max_error);
        csv << line;
    }
    std::cout << csv.str();
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::trunc);
        if (!f) {
            std::cerr << "flowsdr bench-fft: cannot write " << opt.out << "\n";
            return kExitIo;
        }
        f << csv.str();
        if (!f) {
            std::cerr << "flowsdr bench-fft: write failed: " << opt.out << "\n";
            return kExitIo;
        }
    }
    return kExitOk;
}

}  // namespace flowsdr
