// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace sdr::dsp {

/// Deterministic 64-bit generator (splitmix64). The exact algorithm is
/// part of the library contract: test vectors and noise streams must be
/// reproducible bit-for-bit across platforms and standard-library
/// versions, which rules out std::mt19937/std::normal_distribution.
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1): top 53 bits of one word draw.
    double uniform();

    /// One Gaussian pair per call via Box-Muller. Draws exactly two words:
    ///   u1 = (next_u64() >> 11) * 2^-53, mapped into (0, 1]
    ///   u2 = (next_u64() >> 11) * 2^-53
    ///   r = sqrt(-2 ln u1), theta = 2 pi u2
    ///   -> (r cos theta, r sin theta)
    void gaussian_pair(double& z0, double& z1);

    /// Single standard-normal draw (first element of a fresh pair; the
    /// second is cached so consecutive calls still consume two words per
    /// pair).
    double gaussian();

private:
    std::uint64_t state_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sdr::dsp
