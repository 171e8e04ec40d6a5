// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <stdexcept>

#include "sdr/dsp/blocks.hpp"

namespace sdr::dsp {

GaussianNoiseAdder::GaussianNoiseAdder(std::string name, std::uint64_t seed, double stddev)
    : Block(std::move(name)), rng_(seed), stddev_(stddev) {
    if (stddev < 0.0) throw std::invalid_argument("stddev must be >= 0");
    add_input({"in", ItemKind::complex32()});
    add_output({"out", ItemKind::complex32()});
}

WorkStatus GaussianNoiseAdder::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<cfloat>();
    auto out = ctx.out[0].as<cfloat>();
    const std::size_t n = std::min(in.size(), out.size());
    if (stddev_ == 0.0) {
        std::copy_n(in.begin(), n, out.begin());
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            double z0, z1;
            rng_.gaussian_pair(z0, z1);
            out[i] = in[i] + cfloat{static_cast<float>(stddev_ * z0),
                                    static_cast<float>(stddev_ * z1)};
        }
    }
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

}  // namespace sdr::dsp
