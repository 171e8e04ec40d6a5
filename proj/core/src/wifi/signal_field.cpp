// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/signal_field.hpp"

#include <stdexcept>

#include "sdr/wifi/interleaver.hpp"
#include "sdr/wifi/viterbi.hpp"

namespace sdr::wifi {

std::vector<std::uint8_t> signal_bits(const Mcs& mcs, std::size_t length) {
    if (length < 1 || length > 4095)
        throw std::invalid_argument("SIGNAL length must be 1..4095 bytes");
    std::vector<std::uint8_t> bits(24, 0);
    for (int i = 0; i < 4; ++i)  // R1 first
        bits[static_cast<std::size_t>(i)] = (mcs.rate_bits >> (3 - i)) & 1u;
    // bits[4] reserved, 0
    for (int i = 0; i < 12; ++i)  // LSB first
        bits[5 + static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((length >> i) & 1u);
    std::uint8_t parity = 0;
    for (int i = 0; i < 17; ++i) parity ^= bits[static_cast<std::size_t>(i)];
    bits[17] = parity;
    // bits[18..23] tail, 0
    return bits;
}

std::optional<SignalField> decode_signal(std::span<const float> soft_bits, SignalError* error) {
    auto set_err = [&](SignalError e) {
        if (error) *error = e;
    };
    set_err(SignalError::None);
    if (soft_bits.size() != 48) throw std::invalid_argument("SIGNAL symbol carries 48 soft bits");

    const Mcs& bpsk = Mcs::all()[0];  // SIGNAL uses the BPSK interleaver
    const auto deint =
        deinterleave_soft(std::vector<float>(soft_bits.begin(), soft_bits.end()), bpsk);
    const auto bits = viterbi_decode(deint, 24, true);

    std::uint8_t rate = 0;
    for (int i = 0; i < 4; ++i)
        rate = static_cast<std::uint8_t>((rate << 1) | bits[static_cast<std::size_t>(i)]);
    const Mcs* mcs = Mcs::from_rate_bits(rate);
    if (!mcs) {
        set_err(SignalError::BadRate);
        return std::nullopt;
    }

    std::uint8_t parity = 0;
    for (int i = 0; i < 18; ++i) parity ^= bits[static_cast<std::size_t>(i)];
    if (parity != 0) {
        set_err(SignalError::BadParity);
        return std::nullopt;
    }

    for (int i = 18; i < 24; ++i) {
        if (bits[static_cast<std::size_t>(i)]) {
            set_err(SignalError::BadTail);
            return std::nullopt;
        }
    }

    std::size_t length = 0;
    for (int i = 0; i < 12; ++i)
        length |= static_cast<std::size_t>(bits[5 + static_cast<std::size_t>(i)]) << i;
    if (length < 1) {
        set_err(SignalError::BadLength);
        return std::nullopt;
    }
    return SignalField{mcs, length};
}

}  // namespace sdr::wifi
