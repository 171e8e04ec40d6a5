// SPDX-License-Identifier: Apache-2.0
#include "sdr/accel/device.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sdr::accel {

double estimate_transfer_time(const TransferModel& model, std::uint64_t n_bytes) {
    return model.setup_s + static_cast<double>(n_bytes) / model.peak_bytes_per_sec;
}

std::uint32_t default_scale_schedule(std::size_t nfft_log2) {
    std::uint32_t sched = 0;
    for (std::size_t s = 0; s < nfft_log2; ++s) sched |= 1u << (2 * s);
    return sched;
}

namespace {

constexpr std::uint32_t kScaleSchedMask = (1u << 22) - 1;  // 11 stages x 2 bits
constexpr std::uint32_t kStickyMask = kStatusDone | kStatusError | kStatusOverflow;

std::int32_t sat16(std::int64_t v, bool& overflow) {
    if (v > 32767) {
        overflow = true;
        return 32767;
    }
    if (v < -32768) {
        overflow = true;
        return -32768;
    }
    return static_cast<std::int32_t>(v);
}

/// Right shift with symmetric (round-half-away-from-zero) rounding, the
/// usual hardware truncation stage.
std::int64_t rshift_round(std::int64_t v, unsigned s) {
    if (s == 0) return v;
    const std::int64_t half = std::int64_t{1} << (s - 1);
    return v >= 0 ? (v + half) >> s : -((-v + half) >> s);
}

/// Q1.15 twiddles, symmetric clamp so conjugation stays in range.
std::vector<std::int16_t> make_twiddles(std::size_t n) {
    std::vector<std::int16_t> t(n);  // interleaved re, im for k < n/2
    for (std::size_t k = 0; k < n / 2; ++k) {
        const double a = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        const double re = std::nearbyint(std::cos(a) * kQ15One);
        const double im = std::nearbyint(std::sin(a) * kQ15One);
        t[2 * k] = static_cast<std::int16_t>(std::clamp(re, -32767.0, 32767.0));
        t[2 * k + 1] = static_cast<std::int16_t>(std::clamp(im, -32767.0, 32767.0));
    }
    return t;
}

/// In-place radix-2 over int32 component arrays (values stay within the
/// 16-bit range between stages). Returns the sticky overflow flag.
bool fixed_fft(std::vector<std::int32_t>& re, std::vector<std::int32_t>& im, bool inverse,
               std::uint32_t scale_sched) {
    const std::size_t n = re.size();
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) ++bits;

    for (std::size_t i = 0; i < n; ++i) {
        std::size_t r = 0;
        for (std::size_t b = 0; b < bits; ++b)
            if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (bits - 1 - b);
        if (i < r) {
            std::swap(re[i], re[r]);
            std::swap(im[i], im[r]);
        }
    }

    const auto tw = make_twiddles(n);
    bool overflow = false;
    std::size_t stage = 0;
    for (std::size_t len = 2; len <= n; len <<= 1, ++stage) {
        const std::size_t half = len / 2;
        const std::size_t step = n / len;
        const unsigned shift = (scale_sched >> (2 * stage)) & 0x3;
        for (std::size_t base = 0; base < n; base += len) {
            for (std::size_t k = 0; k < half; ++k) {
                const std::int64_t wr = tw[2 * (k * step)];
                const std::int64_t wi = inverse ? -tw[2 * (k * step) + 1] : tw[2 * (k * step) + 1];
                const std::size_t ia = base + k, ib = base + k + half;
                const std::int64_t br = re[ib], bi = im[ib];
                // Complex multiply with the product rounded back to Q1.15.
                const std::int64_t tr = rshift_round(wr * br - wi * bi, 15);
                const std::int64_t ti = rshift_round(wr * bi + wi * br, 15);
                const std::int64_t ur = re[ia], ui = im[ia];
                re[ia] = sat16(rshift_round(ur + tr, shift), overflow);
                im[ia] = sat16(rshift_round(ui + ti, shift), overflow);
                re[ib] = sat16(rshift_round(ur - tr, shift), overflow);
                im[ib] = sat16(rshift_round(ui - ti, shift), overflow);
            }
        }
    }
    return overflow;
}

}  // namespace

FftDevice::FftDevice(TransferModel model) : model_(model) {}

void FftDevice::write_register(std::uint32_t addr, std::uint32_t value) {
    switch (addr) {
    case reg::kStatus:
        status_ &= ~(value & kStickyMask);  // write-1-to-clear; busy read-only
        return;
    case reg::kId:
        reject_write();  // read-only
        return;
    case reg::kDirection:
    case reg::kNfftLog2:
    case reg::kCpLen:
    case reg::kScaleSched:
        if (busy()) {
            reject_write();
            return;
        }
        break;
    default:
        throw DeviceError("unknown register address");
    }
    switch (addr) {
    case reg::kDirection:
        direction_ = value & 1u;
        break;
    case reg::kNfftLog2:
        if (value < 3 || value > 11) {
            reject_write();
            return;
        }
        nfft_log2_ = value;
        break;
    case reg::kCpLen:
        if (value >= (1u << nfft_log2_)) {
            reject_write();
            return;
        }
        cp_len_ = value;
        break;
    case reg::kScaleSched:
        scale_sched_ = value & kScaleSchedMask;
        break;
    default:
        break;
    }
}

std::uint32_t FftDevice::read_register(std::uint32_t addr) const {
    switch (addr) {
    case reg::kId: return kDeviceId;
    case reg::kDirection: return direction_;
    case reg::kNfftLog2: return nfft_log2_;
    case reg::kCpLen: return cp_len_;
    case reg::kScaleSched: return scale_sched_;
    case reg::kStatus: return status_;
    default: throw DeviceError("unknown register address");
    }
}

void FftDevice::configure(const FftDeviceConfig& plan) {
    if (busy()) throw DeviceError("configure while busy");
    const std::size_t n = plan.fft_size;
    if (n < 8 || n > 2048 || (n & (n - 1)) != 0)
        throw DeviceError("unsupported transform size");
    if (plan.cp_len >= n) throw DeviceError("cyclic prefix must be shorter than the transform");
    std::uint32_t lg = 0;
    while ((std::size_t{1} << lg) < n) ++lg;
    write_register(reg::kDirection, plan.direction == dsp::FftDirection::Inverse ? 1u : 0u);
    write_register(reg::kNfftLog2, lg);
    write_register(reg::kCpLen, static_cast<std::uint32_t>(plan.cp_len));
    write_register(reg::kScaleSched, plan.scale_sched);
    configured_ = true;
}

std::size_t FftDevice::expected_input_len() const {
    const bool inverse = direction_ != 0;
    return fft_size() + (inverse ? 0 : cp_len_);
}

std::size_t FftDevice::expected_output_len() const {
    const bool inverse = direction_ != 0;
    return fft_size() + (inverse ? cp_len_ : 0);
}

void FftDevice::begin(std::span<const FixedComplex> input) {
    if (busy()) throw DeviceError("submit while busy");
    if (!configured_) throw DeviceError("submit on an unconfigured device");
    if (input.size() != expected_input_len())
        throw DeviceError("job length does not match the configuration");

    status_ |= kStatusBusy;
    status_ &= ~kStatusDone;

    const std::size_t n = fft_size();
    const bool inverse = direction_ != 0;
    // Forward with a cyclic prefix: the prefix precedes the symbol; strip it.
    const std::size_t off = inverse ? 0 : cp_len_;
    std::vector<std::int32_t> re(n), im(n);
    for (std::size_t k = 0; k < n; ++k) {
        re[k] = input[off + k].i;
        im[k] = input[off + k].q;
    }
    staged_.overflow = fixed_fft(re, im, inverse, scale_sched_);

    staged_.output.resize(expected_output_len());
    const std::size_t out_off = inverse ? cp_len_ : 0;
    for (std::size_t k = 0; k < n; ++k) {
        staged_.output[out_off + k].i = static_cast<std::int16_t>(re[k]);
        staged_.output[out_off + k].q = static_cast<std::int16_t>(im[k]);
    }
    // Inverse with a prefix: replicate the symbol tail ahead of it.
    for (std::size_t c = 0; c < out_off; ++c) staged_.output[c] = staged_.output[n + c];

    const std::uint64_t bytes =
        (static_cast<std::uint64_t>(input.size()) + staged_.output.size()) * sizeof(FixedComplex);
    const double pipeline_s = static_cast<double>(n) * std::log2(static_cast<double>(n)) /
                              model_.clock_hz;
    staged_.modeled_time_s = estimate_transfer_time(model_, bytes) + pipeline_s;
}

Completion FftDevice::finish() {
    if (!busy()) throw DeviceError("no job in flight");
    status_ &= ~kStatusBusy;
    status_ |= kStatusDone;
    if (staged_.overflow) status_ |= kStatusOverflow;
    Completion c = std::move(staged_);
    staged_ = {};
    return c;
}

Completion FftDevice::submit(std::span<const FixedComplex> input) {
    begin(input);
    return finish();
}

}  // namespace sdr::accel
