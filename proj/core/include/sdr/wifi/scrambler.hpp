// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace sdr::wifi {

/// 127-bit self-synchronizing scrambler, polynomial x^7 + x^4 + 1.
/// One step: feedback = s6 ^ s3, output = in ^ feedback, shift feedback in.
class Scrambler {
public:
    explicit Scrambler(std::uint8_t seed);

    std::uint8_t step(std::uint8_t in) {
        const std::uint8_t fb = ((state_ >> 6) ^ (state_ >> 3)) & 1u;
        state_ = static_cast<std::uint8_t>(((state_ << 1) | fb) & 0x7Fu);
        return in ^ fb;
    }

    std::uint8_t state() const { return state_; }

private:
    std::uint8_t state_;
};

/// XOR the whole bit sequence with the LFSR stream (self-inverse).
std::vector<std::uint8_t> scramble(const std::vector<std::uint8_t>& bits, std::uint8_t seed);

/// Recover the transmitter seed from the first 7 scrambled bits (the
/// service field starts with 7 zero bits, so those bits expose the LFSR
/// output directly) and descramble. Returns the recovered seed.
std::uint8_t descramble(std::vector<std::uint8_t>& bits);

}  // namespace sdr::wifi
