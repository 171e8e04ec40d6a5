// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

namespace sdr::wifi {

/// OFDM numerology for the 10 MHz (half-clocked) profile: 64-point
/// transform, 16-sample cyclic prefix, 48 data carriers, 4 pilots, and
/// the 160-sample short/long training sequences.
struct OfdmParams {
    double sample_rate = 10e6;
    std::size_t fft_size = 64;
    std::size_t cp_len = 16;
    std::size_t stf_len = 160;
    std::size_t ltf_len = 160;

    static constexpr std::array<int, 4> pilot_carriers = {-21, -7, 7, 21};
    static constexpr std::array<float, 4> pilot_values = {1.0f, 1.0f, 1.0f, -1.0f};

    /// Data carriers in bit-mapping order: -26..26 excluding DC and pilots.
    static const std::array<int, 48>& data_carriers();

    /// Subcarrier index (-32..31) to FFT bin (0..63).
    std::size_t bin(int carrier) const {
        return static_cast<std::size_t>((carrier + static_cast<int>(fft_size)) %
                                        static_cast<int>(fft_size));
    }

    std::size_t symbol_len() const { return fft_size + cp_len; }
    double subcarrier_spacing() const { return sample_rate / static_cast<double>(fft_size); }
};

enum class Modulation : std::uint8_t { Bpsk, Qpsk, Qam16, Qam64 };
enum class CodeRate : std::uint8_t { Half, TwoThirds, ThreeQuarters };

/// One of the eight standard modulation/rate combinations.
struct Mcs {
    Modulation modulation;
    CodeRate code_rate;
    std::uint8_t rate_bits;  // 4-bit SIGNAL pattern, first-transmitted bit in bit 3
    std::size_t n_bpsc;      // coded bits per subcarrier
    std::size_t n_cbps;      // coded bits per OFDM symbol
    std::size_t n_dbps;      // data bits per OFDM symbol

    static const Mcs& get(Modulation m, CodeRate r);
    static const Mcs* from_rate_bits(std::uint8_t bits);  // nullptr if invalid
    static const std::array<Mcs, 8>& all();
    std::size_t index() const;  // position in all()

    const char* str() const;
};

/// OFDM symbols needed for a PSDU: 16 service bits + 8 bits/byte + 6 tail,
/// rounded up to whole symbols.
std::size_t n_data_symbols(std::size_t psdu_len, const Mcs& mcs);

/// Samples in a complete frame: STF + LTF + SIGNAL + data symbols.
std::size_t frame_sample_count(std::size_t psdu_len, const Mcs& mcs, const OfdmParams& p);

/// Pilot polarity p_0..p_126 (the all-ones scrambler sequence mapped
/// 0 -> +1, 1 -> -1). SIGNAL uses p_0; data symbol j uses p_(j mod 127).
float pilot_polarity(std::size_t symbol_index);

}  // namespace sdr::wifi
