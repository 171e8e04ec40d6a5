// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/scrambler.hpp"

#include <stdexcept>

namespace sdr::wifi {

Scrambler::Scrambler(std::uint8_t seed) : state_(seed & 0x7Fu) {
    if (state_ == 0) throw std::invalid_argument("scrambler seed must be nonzero");
}

std::vector<std::uint8_t> scramble(const std::vector<std::uint8_t>& bits, std::uint8_t seed) {
    Scrambler s(seed);
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) out[i] = s.step(bits[i]);
    return out;
}

std::uint8_t descramble(std::vector<std::uint8_t>& bits) {
    if (bits.size() < 7) throw std::invalid_argument("need at least 7 bits to recover the seed");
    // After 7 steps the register holds the last 7 outputs, newest in bit 0.
    std::uint8_t state = 0;
    for (std::size_t i = 0; i < 7; ++i)
        state = static_cast<std::uint8_t>((state << 1) | (bits[i] & 1u));
    // Walk the register back 7 steps: s6_old = out ^ s3' where out is the
    // bit that was shifted in (bit 0 of the current state).
    for (int i = 0; i < 7; ++i) {
        const std::uint8_t s6 = static_cast<std::uint8_t>((state ^ (state >> 4)) & 1u);
        state = static_cast<std::uint8_t>(((state >> 1) | (s6 << 6)) & 0x7Fu);
    }
    const std::uint8_t seed = state;
    bits = scramble(bits, seed);
    return seed;
}

}  // namespace sdr::wifi
