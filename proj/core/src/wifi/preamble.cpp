// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/preamble.hpp"

#include <cmath>

#include "sdr/dsp/fft.hpp"

namespace sdr::wifi {

namespace {
// Occupied short-training carriers: every 4th bin, sqrt(13/6)*(+-1 +- j).
struct StfEntry {
    int carrier;
    float re, im;
};
constexpr StfEntry kStf[] = {
    {-24, 1, 1},  {-20, -1, -1}, {-16, 1, 1}, {-12, -1, -1}, {-8, -1, -1}, {-4, 1, 1},
    {4, -1, -1},  {8, -1, -1},   {12, 1, 1},  {16, 1, 1},    {20, 1, 1},   {24, 1, 1},
};

// Long-training sequence, subcarriers -26..-1 then +1..+26.
constexpr int kLtfNeg[26] = {1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1,
                             1, 1, -1, -1, 1, 1, -1, 1, -1, 1, 1, 1, 1};
constexpr int kLtfPos[26] = {1, -1, -1, 1,  1,  -1, 1,  -1, 1, -1, -1, -1, -1,
                             -1, 1, 1, -1, -1, 1, -1, 1,  -1, 1, 1,  1,  1};

std::vector<cfloat> ifft_symbol(const std::vector<cfloat>& freq, const OfdmParams& p) {
    dsp::Fft plan({p.fft_size, dsp::FftDirection::Inverse, true});
    auto t = plan.run(freq);
    const float g = ofdm_symbol_gain(p);
    for (auto& v : t) v *= g;
    return t;
}
}  // namespace

float ltf_reference(int carrier) {
    if (carrier >= -26 && carrier <= -1) return static_cast<float>(kLtfNeg[carrier + 26]);
    if (carrier >= 1 && carrier <= 26) return static_cast<float>(kLtfPos[carrier - 1]);
    return 0.0f;
}

float ofdm_symbol_gain(const OfdmParams& p) {
    // Occupied-band energy is 52 for both training fields and data
    // symbols, so one gain normalizes everything.
    return static_cast<float>(static_cast<double>(p.fft_size) / std::sqrt(52.0));
}

std::vector<cfloat> build_stf(const OfdmParams& p) {
    std::vector<cfloat> freq(p.fft_size, cfloat{});
    const float a = static_cast<float>(std::sqrt(13.0 / 6.0));
    for (const auto& e : kStf) freq[p.bin(e.carrier)] = cfloat{e.re * a, e.im * a};
    const auto period = ifft_symbol(freq, p);
    std::vector<cfloat> out(p.stf_len);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = period[n % p.fft_size];
    return out;
}

std::vector<cfloat> ltf_time_period(const OfdmParams& p) {
    std::vector<cfloat> freq(p.fft_size, cfloat{});
    for (int c = -26; c <= 26; ++c)
        if (c != 0) freq[p.bin(c)] = {ltf_reference(c), 0.0f};
    return ifft_symbol(freq, p);
}

std::vector<cfloat> build_ltf(const OfdmParams& p) {
    const auto& period = ltf_time_period(p);
    std::vector<cfloat> out(p.ltf_len);
    const std::size_t cp = p.ltf_len - 2 * p.fft_size;  // 32 for the default profile
    for (std::size_t n = 0; n < cp; ++n) out[n] = period[p.fft_size - cp + n];
    for (std::size_t n = 0; n < 2 * p.fft_size; ++n) out[cp + n] = period[n % p.fft_size];
    return out;
}

}  // namespace sdr::wifi
