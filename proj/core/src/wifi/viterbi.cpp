// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/viterbi.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace sdr::wifi {

namespace {
constexpr std::uint32_t kGenA = 0b1011011;
constexpr std::uint32_t kGenB = 0b1111001;
constexpr std::size_t kStates = 64;

std::uint8_t parity(std::uint32_t v) { return static_cast<std::uint8_t>(std::popcount(v) & 1); }
}  // namespace

std::vector<std::uint8_t> viterbi_decode(std::span<const float> soft, std::size_t n_info,
                                         bool tail_terminated) {
    if (soft.size() != 2 * n_info)
        throw std::invalid_argument("soft stream must hold two metrics per information bit");
    if (n_info == 0) return {};

    // Expected (A, B) for a transition is a function of the 7-bit window
    // (input bit in bit 6, predecessor state in bits 5..0).
    std::uint8_t out_a[128], out_b[128];
    for (std::uint32_t w = 0; w < 128; ++w) {
        out_a[w] = parity(w & kGenA);
        out_b[w] = parity(w & kGenB);
    }

    constexpr float kNegInf = -std::numeric_limits<float>::infinity();
    std::vector<float> path(kStates, kNegInf), next(kStates);
    path[0] = 0.0f;
    // decisions[t] bit s: which oldest-bit choice the survivor into state
    // s took at step t.
    std::vector<std::uint64_t> decisions(n_info);

    for (std::size_t t = 0; t < n_info; ++t) {
        const float ma = soft[2 * t];
        const float mb = soft[2 * t + 1];
        std::uint64_t dec = 0;
        for (std::uint32_t s = 0; s < kStates; ++s) {
            const std::uint32_t b = s >> 5;  // input bit that leads into s
            float best = kNegInf;
            std::uint32_t best_x = 0;
            for (std::uint32_t x = 0; x < 2; ++x) {
                const std::uint32_t prev = ((s << 1) | x) & 63u;
                if (path[prev] == kNegInf) continue;
                const std::uint32_t w = (b << 6) | prev;
                const float m = path[prev] + (out_a[w] ? -ma : ma) + (out_b[w] ? -mb : mb);
                if (m > best) {
                    best = m;
                    best_x = x;
                }
            }
            next[s] = best;
            if (best_x) dec |= std::uint64_t{1} << s;
        }
        decisions[t] = dec;
        std::swap(path, next);
    }

    std::uint32_t state = 0;
    if (!tail_terminated) {
        state = static_cast<std::uint32_t>(
            std::max_element(path.begin(), path.end()) - path.begin());
    } else if (path[0] == kNegInf) {
        // No survivor reaches the zero state (can happen only for very
        // short blocks); fall back to the best reachable state.
        state = static_cast<std::uint32_t>(
            std::max_element(path.begin(), path.end()) - path.begin());
    }

    std::vector<std::uint8_t> bits(n_info);
    for (std::size_t t = n_info; t-- > 0;) {
        bits[t] = static_cast<std::uint8_t>(state >> 5);
        const std::uint32_t x = (decisions[t] >> state) & 1u;
        state = ((state << 1) | x) & 63u;
    }
    return bits;
}

}  // namespace sdr::wifi
