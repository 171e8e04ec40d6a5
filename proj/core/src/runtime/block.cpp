// SPDX-License-Identifier: Apache-2.0
#include "sdr/block.hpp"

namespace sdr {

void PerfCounters::configure(std::size_t n_in, std::size_t n_out) {
    in_ = std::vector<std::atomic<std::uint64_t>>(n_in);
    out_ = std::vector<std::atomic<std::uint64_t>>(n_out);
    reset();
}

void PerfCounters::reset() {
    calls_.store(0, std::memory_order_relaxed);
    time_ns_.store(0, std::memory_order_relaxed);
    for (auto& c : in_) c.store(0, std::memory_order_relaxed);
    for (auto& c : out_) c.store(0, std::memory_order_relaxed);
}

void PerfCounters::on_work(std::span<const std::size_t> consumed,
                           std::span<const std::size_t> produced,
                           std::uint64_t elapsed_ns) {
    calls_.fetch_add(1, std::memory_order_release);
    time_ns_.fetch_add(elapsed_ns, std::memory_order_release);
    for (std::size_t i = 0; i < consumed.size() && i < in_.size(); ++i)
        in_[i].fetch_add(consumed[i], std::memory_order_release);
    for (std::size_t i = 0; i < produced.size() && i < out_.size(); ++i)
        out_[i].fetch_add(produced[i], std::memory_order_release);
}

}  // namespace sdr
