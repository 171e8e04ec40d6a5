// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/encoder.hpp"

#include <stdexcept>

#include "sdr/dsp/fft.hpp"
#include "sdr/wifi/convolutional.hpp"
#include "sdr/wifi/interleaver.hpp"
#include "sdr/wifi/mapping.hpp"
#include "sdr/wifi/preamble.hpp"
#include "sdr/wifi/scrambler.hpp"
#include "sdr/wifi/signal_field.hpp"

namespace sdr::wifi {

std::vector<cfloat> build_data_symbol(std::span<const cfloat> points, std::size_t symbol_index,
                                      const OfdmParams& p) {
    if (points.size() != OfdmParams::data_carriers().size())
        throw std::invalid_argument("a data symbol needs 48 constellation points");
    std::vector<cfloat> freq(p.fft_size, cfloat{});
    const auto& dc = OfdmParams::data_carriers();
    for (std::size_t k = 0; k < dc.size(); ++k) freq[p.bin(dc[k])] = points[k];
    const float pol = pilot_polarity(symbol_index);
    for (std::size_t i = 0; i < OfdmParams::pilot_carriers.size(); ++i)
        freq[p.bin(OfdmParams::pilot_carriers[i])] = {OfdmParams::pilot_values[i] * pol, 0.0f};

    dsp::Fft ifft({p.fft_size, dsp::FftDirection::Inverse, true});
    auto t = ifft.run(freq);
    const float g = ofdm_symbol_gain(p);
    for (auto& v : t) v *= g;

    std::vector<cfloat> out(p.symbol_len());
    for (std::size_t n = 0; n < p.cp_len; ++n) out[n] = t[p.fft_size - p.cp_len + n];
    for (std::size_t n = 0; n < p.fft_size; ++n) out[p.cp_len + n] = t[n];
    return out;
}

std::vector<cfloat> encode_frame(std::span<const std::uint8_t> psdu, const Mcs& mcs,
                                 const OfdmParams& p, std::uint8_t scrambler_seed) {
    if (psdu.empty() || psdu.size() > 4095)
        throw std::invalid_argument("PSDU length must be 1..4095 bytes");
    if ((scrambler_seed & 0x7F) == 0)
        throw std::invalid_argument("scrambler seed must be nonzero");

    std::vector<cfloat> out;
    out.reserve(frame_sample_count(psdu.size(), mcs, p));
    const auto stf = build_stf(p);
    const auto ltf = build_ltf(p);
    out.insert(out.end(), stf.begin(), stf.end());
    out.insert(out.end(), ltf.begin(), ltf.end());

    // SIGNAL: BPSK rate 1/2, never scrambled, pilot polarity index 0.
    {
        const auto bits = signal_bits(mcs, psdu.size());
        const auto coded = conv_encode(bits);
        const auto inter = interleave(coded, Mcs::all()[0]);
        const auto points = map_bits(inter, Modulation::Bpsk);
        const auto sym = build_data_symbol(points, 0, p);
        out.insert(out.end(), sym.begin(), sym.end());
    }

    // DATA: service + psdu + tail, padded to whole symbols.
    const std::size_t n_sym = n_data_symbols(psdu.size(), mcs);
    const std::size_t n_bits = n_sym * mcs.n_dbps;
    std::vector<std::uint8_t> bits(n_bits, 0);
    for (std::size_t i = 0; i < psdu.size(); ++i)  // bytes LSB first
        for (std::size_t b = 0; b < 8; ++b)
            bits[16 + 8 * i + b] = (psdu[i] >> b) & 1u;
    bits = scramble(bits, scrambler_seed);
    const std::size_t tail_at = 16 + 8 * psdu.size();
    for (std::size_t i = 0; i < 6; ++i) bits[tail_at + i] = 0;  // tail stays zero

    const auto punctured = puncture(conv_encode(bits), mcs.code_rate);
    for (std::size_t s = 0; s < n_sym; ++s) {
        std::vector<std::uint8_t> sym_bits(punctured.begin() + static_cast<std::ptrdiff_t>(s * mcs.n_cbps),
                                           punctured.begin() + static_cast<std::ptrdiff_t>((s + 1) * mcs.n_cbps));
        const auto inter = interleave(sym_bits, mcs);
        const auto points = map_bits(inter, mcs.modulation);
        const auto sym = build_data_symbol(points, s + 1, p);
        out.insert(out.end(), sym.begin(), sym.end());
    }
    return out;
}

}  // namespace sdr::wifi
