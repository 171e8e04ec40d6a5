// SPDX-License-Identifier: Apache-2.0
#include "sdr/dsp/rng.hpp"

#include <cmath>
#include <numbers>

namespace sdr::dsp {

std::uint64_t Rng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

void Rng::gaussian_pair(double& z0, double& z1) {
    // u1 shifted into (0, 1] so ln(u1) is always finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    z0 = r * std::cos(theta);
    z1 = r * std::sin(theta);
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double z0, z1;
    gaussian_pair(z0, z1);
    spare_ = z1;
    have_spare_ = true;
    return z0;
}

}  // namespace sdr::dsp
