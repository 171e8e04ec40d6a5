// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "sdr/dsp/blocks.hpp"

namespace sdr::dsp {

Throttle::Throttle(std::string name, ItemKind kind, std::optional<double> items_per_sec)
    : Block(std::move(name)), item_bytes_(kind.bytes()), rate_(items_per_sec) {
    if (rate_ && !(*rate_ > 0.0)) throw std::invalid_argument("throttle rate must be positive");
    add_input({"in", kind});
    add_output({"out", kind});
}

WorkStatus Throttle::work(WorkContext& ctx) {
    auto& in = ctx.in[0];
    auto& out = ctx.out[0];
    std::size_t n = std::min(in.items(item_bytes_), out.items(item_bytes_));
    if (n == 0) return WorkStatus::Ok;

    if (rate_) {
        using dsecs = std::chrono::duration<double>;
        const auto now = std::chrono::steady_clock::now();
        if (!started_) {
            start_ = now;
            started_ = true;
        }
        const double elapsed = dsecs(now - start_).count();
        auto budget = static_cast<std::uint64_t>(elapsed * *rate_);
        if (budget <= emitted_) {
            // Sleep until at least one more item is due, then emit it; a
            // work call with pending input always forwards something.
            const double due = static_cast<double>(emitted_ + 1) / *rate_;
            std::this_thread::sleep_until(start_ + std::chrono::duration_cast<
                                                        std::chrono::steady_clock::duration>(dsecs(due)));
            budget = emitted_ + 1;
        }
        n = std::min<std::size_t>(n, static_cast<std::size_t>(budget - emitted_));
        emitted_ += n;
    }

    std::memcpy(out.raw.data(), in.raw.data(), n * item_bytes_);
    in.consumed = n;
    out.produced = n;
    return WorkStatus::Ok;
}

}  // namespace sdr::dsp
