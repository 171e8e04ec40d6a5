// SPDX-License-Identifier: Apache-2.0
#include "sdr/wifi/interleaver.hpp"

#include <algorithm>
#include <stdexcept>

namespace sdr::wifi {

namespace {
// perm[k] = final position of input bit k after both permutations.
std::vector<std::size_t> permutation(const Mcs& mcs) {
    const std::size_t n = mcs.n_cbps;
    const std::size_t s = std::max<std::size_t>(mcs.n_bpsc / 2, 1);
    std::vector<std::size_t> perm(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = (n / 16) * (k % 16) + k / 16;
        const std::size_t j = s * (i / s) + (i + n - (16 * i / n)) % s;
        perm[k] = j;
    }
    return perm;
}

void check_len(std::size_t got, const Mcs& mcs) {
    if (got != mcs.n_cbps)
        throw std::invalid_argument("interleaver input must be one symbol of coded bits");
}
}  // namespace

std::vector<std::uint8_t> interleave(const std::vector<std::uint8_t>& bits, const Mcs& mcs) {
    check_len(bits.size(), mcs);
    const auto perm = permutation(mcs);
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) out[perm[k]] = bits[k];
    return out;
}

std::vector<std::uint8_t> deinterleave(const std::vector<std::uint8_t>& bits, const Mcs& mcs) {
    check_len(bits.size(), mcs);
    const auto perm = permutation(mcs);
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t k = 0; k < bits.size(); ++k) out[k] = bits[perm[k]];
    return out;
}

std::vector<float> deinterleave_soft(const std::vector<float>& soft, const Mcs& mcs) {
    check_len(soft.size(), mcs);
    const auto perm = permutation(mcs);
    std::vector<float> out(soft.size());
    for (std::size_t k = 0; k < soft.size(); ++k) out[k] = soft[perm[k]];
    return out;
}

}  // namespace sdr::wifi
