// SPDX-License-Identifier: Apache-2.0
#include "sdr/dsp/fft.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "sdr/dsp/blocks.hpp"

namespace sdr::dsp {

namespace {
bool is_pow2(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }
}  // namespace

Fft::Fft(FftPlan plan) : plan_(plan) {
    if (!is_pow2(plan_.n))
        throw std::invalid_argument("fft size must be a power of two >= 2");
    const std::size_t n = plan_.n;
    twiddle_.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        twiddle_[k] = {static_cast<float>(std::cos(a)), static_cast<float>(std::sin(a))};
    }
    rev_.resize(n);
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        rev_[i] = static_cast<std::uint32_t>(r);
    }
}

void Fft::run(std::span<const cfloat> in, std::span<cfloat> out) const {
    const std::size_t n = plan_.n;
    if (in.size() != n || out.size() != n)
        throw std::invalid_argument("fft input/output length must equal plan size");

    const bool inverse = plan_.direction == FftDirection::Inverse;
    // Bit-reversed reorder into the output buffer; rev is an involution,
    // so aliased in/out can be handled with swaps.
    if (in.data() == out.data()) {
        for (std::size_t i = 0; i < n; ++i)
            if (i < rev_[i]) std::swap(out[i], out[rev_[i]]);
    } else {
        for (std::size_t i = 0; i < n; ++i) out[rev_[i]] = in[i];
    }

    for (std::size_t len = 2; len <= n; len <<= 1) {
        const std::size_t half = len / 2;
        const std::size_t step = n / len;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < half; ++k) {
                cfloat w = twiddle_[k * step];
                if (inverse) w = std::conj(w);
                const cfloat t = w * out[base + k + half];
                const cfloat u = out[base + k];
                out[base + k] = u + t;
                out[base + k + half] = u - t;
            }
        }
    }

    if (inverse && plan_.scale_inverse) {
        const float s = 1.0f / static_cast<float>(n);
        for (auto& v : out) v *= s;
    }
}

std::vector<cfloat> Fft::run(const std::vector<cfloat>& x) const {
    std::vector<cfloat> y(x.size());
    run(std::span<const cfloat>(x), std::span<cfloat>(y));
    return y;
}

std::vector<cfloat> fft_forward(const std::vector<cfloat>& x) {
    return Fft({x.size(), FftDirection::Forward, true}).run(x);
}

std::vector<cfloat> fft_inverse(const std::vector<cfloat>& x) {
    return Fft({x.size(), FftDirection::Inverse, true}).run(x);
}

FftStage::FftStage(std::string name, std::uint32_t n, FftDirection direction,
                   FftBackend* backend)
    : Block(std::move(name)),
      n_(n),
      backend_(backend),
      plan_(FftPlan{n, direction, true}) {
    if (backend_ && !backend_->supports(n))
        throw std::invalid_argument("fft backend does not support size " + std::to_string(n));
    add_input({"in", ItemKind::cvec(n_)});
    add_output({"out", ItemKind::cvec(n_)});
}

WorkStatus FftStage::work(WorkContext& ctx) {
    auto& in = ctx.in[0];
    auto& out = ctx.out[0];
    const std::size_t item = std::size_t{n_} * sizeof(cfloat);
    const std::size_t count = std::min(in.items(item), out.items(item));
    auto src = in.as<cfloat>();
    auto dst = out.as<cfloat>();
    for (std::size_t i = 0; i < count; ++i) {
        std::span<const cfloat> s(src.data() + i * n_, n_);
        std::span<cfloat> d(dst.data() + i * n_, n_);
        if (backend_)
            backend_->transform(s, d, plan_.plan().direction);
        else
            plan_.run(s, d);
    }
    in.consumed = count;
    out.produced = count;
    // Never self-declare Done on an eof heuristic: the window may be a
    // chunk-capped slice of a larger backlog. The scheduler finishes this
    // block once its input is exhausted and an activation moves nothing.
    return WorkStatus::Ok;
}

std::vector<std::pair<std::string, double>> FftStage::extra_metrics() const {
    return {{"modeled_offload_s", backend_ ? backend_->modeled_time_s() : 0.0}};
}

void SoftwareFftBackend::transform(std::span<const cfloat> in, std::span<cfloat> out,
                                   FftDirection dir) {
    for (const auto& p : plans_) {
        if (p->plan().n == in.size() && p->plan().direction == dir) {
            p->run(in, out);
            return;
        }
    }
    plans_.push_back(std::make_unique<Fft>(FftPlan{in.size(), dir, true}));
    plans_.back()->run(in, out);
}

}  // namespace sdr::dsp
