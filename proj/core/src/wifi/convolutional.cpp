// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/convolutional.hpp"

#include <bit>
#include <stdexcept>

namespace sdr::wifi {

namespace {
// Newest input in bit 6 of the 7-bit window; masks are the 133/171
// generators expressed in that orientation.
constexpr std::uint32_t kGenA = 0b1011011;
constexpr std::uint32_t kGenB = 0b1111001;

std::uint8_t parity(std::uint32_t v) { return static_cast<std::uint8_t>(std::popcount(v) & 1); }
}  // namespace

std::vector<std::uint8_t> conv_encode(const std::vector<std::uint8_t>& bits) {
    std::vector<std::uint8_t> out(bits.size() * 2);
    std::uint32_t w = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        w = ((w >> 1) | (static_cast<std::uint32_t>(bits[i] & 1u) << 6)) & 0x7Fu;
        out[2 * i] = parity(w & kGenA);
        out[2 * i + 1] = parity(w & kGenB);
    }
    return out;
}

std::vector<std::uint8_t> puncture(const std::vector<std::uint8_t>& coded, CodeRate rate) {
    switch (rate) {
    case CodeRate::Half:
        return coded;
    case CodeRate::TwoThirds: {
        if (coded.size() % 4 != 0)
            throw std::invalid_argument("rate-2/3 puncturing needs multiples of 4 coded bits");
        std::vector<std::uint8_t> out;
        out.reserve(coded.size() / 4 * 3);
        for (std::size_t i = 0; i < coded.size(); i += 4) {
            out.push_back(coded[i]);
            out.push_back(coded[i + 1]);
            out.push_back(coded[i + 2]);
        }
        return out;
    }
    case CodeRate::ThreeQuarters: {
        if (coded.size() % 6 != 0)
            throw std::invalid_argument("rate-3/4 puncturing needs multiples of 6 coded bits");
        std::vector<std::uint8_t> out;
        out.reserve(coded.size() / 6 * 4);
        for (std::size_t i = 0; i < coded.size(); i += 6) {
            out.push_back(coded[i]);
            out.push_back(coded[i + 1]);
            out.push_back(coded[i + 2]);
            out.push_back(coded[i + 5]);
        }
        return out;
    }
    }
    throw std::invalid_argument("unknown code rate");
}

std::vector<float> depuncture(const std::vector<float>& soft, CodeRate rate,
                              std::size_t coded_len) {
    if (punctured_len(coded_len / 2, rate) != soft.size())
        throw std::invalid_argument("soft stream length inconsistent with code rate");
    std::vector<float> out(coded_len, 0.0f);
    switch (rate) {
    case CodeRate::Half:
        return soft;
    case CodeRate::TwoThirds: {
        std::size_t s = 0;
        for (std::size_t i = 0; i < coded_len; i += 4) {
            out[i] = soft[s++];
            out[i + 1] = soft[s++];
            out[i + 2] = soft[s++];
        }
        return out;
    }
    case CodeRate::ThreeQuarters: {
        std::size_t s = 0;
        for (std::size_t i = 0; i < coded_len; i += 6) {
            out[i] = soft[s++];
            out[i + 1] = soft[s++];
            out[i + 2] = soft[s++];
            out[i + 5] = soft[s++];
        }
        return out;
    }
    }
    throw std::invalid_argument("unknown code rate");
}

std::size_t punctured_len(std::size_t info_bits, CodeRate rate) {
    const std::size_t mother = info_bits * 2;
    switch (rate) {
    case CodeRate::Half: return mother;
    case CodeRate::TwoThirds: return mother / 4 * 3;
    case CodeRate::ThreeQuarters: return mother / 6 * 4;
    }
    throw std::invalid_argument("unknown code rate");
}

}  // namespace sdr::wifi
