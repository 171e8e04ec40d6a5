// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/params.hpp"

#include "sdr/wifi/scrambler.hpp"

namespace sdr::wifi {

const std::array<int, 48>& OfdmParams::data_carriers() {
    static const std::array<int, 48> k = [] {
        std::array<int, 48> v{};
        std::size_t i = 0;
        for (int c = -26; c <= 26; ++c) {
            if (c == 0 || c == -21 || c == -7 || c == 7 || c == 21) continue;
            v[i++] = c;
        }
        return v;
    }();
    return k;
}

namespace {
constexpr std::array<Mcs, 8> kMcsTable = {{
    {Modulation::Bpsk, CodeRate::Half, 0b1101, 1, 48, 24},
    {Modulation::Bpsk, CodeRate::ThreeQuarters, 0b1111, 1, 48, 36},
    {Modulation::Qpsk, CodeRate::Half, 0b0101, 2, 96, 48},
    {Modulation::Qpsk, CodeRate::ThreeQuarters, 0b0111, 2, 96, 72},
    {Modulation::Qam16, CodeRate::Half, 0b1001, 4, 192, 96},
    {Modulation::Qam16, CodeRate::ThreeQuarters, 0b1011, 4, 192, 144},
    {Modulation::Qam64, CodeRate::TwoThirds, 0b0001, 6, 288, 192},
    {Modulation::Qam64, CodeRate::ThreeQuarters, 0b0011, 6, 288, 216},
}};
}  // namespace

const std::array<Mcs, 8>& Mcs::all() { return kMcsTable; }

const Mcs& Mcs::get(Modulation m, CodeRate r) {
    for (const auto& e : kMcsTable)
        if (e.modulation == m && e.code_rate == r) return e;
    throw std::invalid_argument("no such modulation/code-rate combination");
}

const Mcs* Mcs::from_rate_bits(std::uint8_t bits) {
    for (const auto& e : kMcsTable)
        if (e.rate_bits == bits) return &e;
    return nullptr;
}

std::size_t Mcs::index() const {
    for (std::size_t i = 0; i < kMcsTable.size(); ++i)
        if (kMcsTable[i].rate_bits == rate_bits) return i;
    return 0;
}

const char* Mcs::str() const {
    switch (index()) {
    case 0: return "bpsk-1/2";
    case 1: return "bpsk-3/4";
    case 2: return "qpsk-1/2";
    case 3: return "qpsk-3/4";
    case 4: return "qam16-1/2";
    case 5: return "qam16-3/4";
    case 6: return "qam64-2/3";
    default: return "qam64-3/4";
    }
}

std::size_t n_data_symbols(std::size_t psdu_len, const Mcs& mcs) {
    const std::size_t bits = 16 + 8 * psdu_len + 6;
    return (bits + mcs.n_dbps - 1) / mcs.n_dbps;
}

std::size_t frame_sample_count(std::size_t psdu_len, const Mcs& mcs, const OfdmParams& p) {
    return p.stf_len + p.ltf_len + p.symbol_len() * (1 + n_data_symbols(psdu_len, mcs));
}

float pilot_polarity(std::size_t symbol_index) {
    static const std::array<float, 127> seq = [] {
        std::array<float, 127> s{};
        Scrambler lfsr(0x7F);
        for (auto& v : s) v = lfsr.step(0) ? -1.0f : 1.0f;
        return s;
    }();
    return seq[symbol_index % 127];
}

}  // namespace sdr::wifi
