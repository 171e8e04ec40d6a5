// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/crc32.hpp"

#include <array>

namespace sdr::wifi {

namespace {
std::array<std::uint32_t, 256> make_table() {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int b = 0; b < 8; ++b) c = (c & 1u) ? (c >> 1) ^ 0xEDB88320u : c >> 1;
        t[i] = c;
    }
    return t;
}
}  // namespace

std::uint32_t crc32(std::span<const std::uint8_t> data) {
    static const auto table = make_table();
    std::uint32_t c = 0xFFFFFFFFu;
    for (std::uint8_t byte : data) c = table[(c ^ byte) & 0xFFu] ^ (c >> 8);
    return c ^ 0xFFFFFFFFu;
}

std::vector<std::uint8_t> append_fcs(std::span<const std::uint8_t> payload) {
    std::vector<std::uint8_t> out(payload.begin(), payload.end());
    const std::uint32_t c = crc32(payload);
    out.push_back(static_cast<std::uint8_t>(c & 0xFF));
    out.push_back(static_cast<std::uint8_t>((c >> 8) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((c >> 16) & 0xFF));
    out.push_back(static_cast<std::uint8_t>((c >> 24) & 0xFF));
    return out;
}

bool check_fcs(std::span<const std::uint8_t> psdu) {
    if (psdu.size() < 4) return true;
    const auto body = psdu.first(psdu.size() - 4);
    const std::uint32_t c = crc32(body);
    const auto t = psdu.last(4);
    const std::uint32_t stored = static_cast<std::uint32_t>(t[0]) |
                                 (static_cast<std::uint32_t>(t[1]) << 8) |
                                 (static_cast<std::uint32_t>(t[2]) << 16) |
                                 (static_cast<std::uint32_t>(t[3]) << 24);
    return c == stored;
}

}  // namespace sdr::wifi
