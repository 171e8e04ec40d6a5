// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <cstring>
#include <optional>
#include <vector>

#include "sdr/block.hpp"
#include "sdr/dsp/fft.hpp"
#include "sdr/dsp/rng.hpp"
#include "sdr/types.hpp"

namespace sdr::dsp {

/// Endless complex exponential: amplitude * exp(j 2 pi f n / fs), n from 0.
/// Each sample is computed from its absolute index, so the emitted stream
/// is identical for any chunking.
class CosineSource : public Block {
public:
    CosineSource(std::string name, double frequency_hz, double sample_rate_hz, double amplitude);
    WorkStatus work(WorkContext& ctx) override;

private:
    double cycles_per_sample_;
    double amplitude_;
    std::uint64_t n_ = 0;
};

/// Adds circularly-symmetric complex Gaussian noise; per-component
/// standard deviation `stddev`. One Box-Muller pair (two word draws) per
/// complex sample, so the noise sequence depends only on the sample
/// index, never on chunk boundaries.
class GaussianNoiseAdder : public Block {
public:
    GaussianNoiseAdder(std::string name, std::uint64_t seed, double stddev);
    WorkStatus work(WorkContext& ctx) override;

private:
    Rng rng_;
    double stddev_;
};

/// Pass-through that limits the long-run emission rate. Content is
/// untouched and works for any item kind. With no rate set it forwards
/// without ever sleeping.
class Throttle : public Block {
public:
    Throttle(std::string name, ItemKind kind, std::optional<double> items_per_sec);
    WorkStatus work(WorkContext& ctx) override;

private:
    std::size_t item_bytes_;
    std::optional<double> rate_;
    std::chrono::steady_clock::time_point start_;
    bool started_ = false;
    std::uint64_t emitted_ = 0;
};

/// Groups N consecutive complex samples into one vector item. A trailing
/// group shorter than N is never flushed; it stays unconsumed upstream.
class StreamToVector : public Block {
public:
    StreamToVector(std::string name, std::uint32_t n);
    WorkStatus work(WorkContext& ctx) override;

private:
    std::uint32_t n_;
};

/// Splits vector items back into N consecutive complex samples.
class VectorToStream : public Block {
public:
    VectorToStream(std::string name, std::uint32_t n);
    WorkStatus work(WorkContext& ctx) override;

private:
    std::uint32_t n_;
};

/// y = x / scale.
class IntToFloat : public Block {
public:
    IntToFloat(std::string name, double scale);
    WorkStatus work(WorkContext& ctx) override;

private:
    double scale_;
};

/// y = round(x * scale), saturated to the int32 range.
class FloatToInt : public Block {
public:
    FloatToInt(std::string name, double scale);
    WorkStatus work(WorkContext& ctx) override;

private:
    double scale_;
};

/// Keeps the real part, drops the imaginary part.
class ComplexToReal : public Block {
public:
    explicit ComplexToReal(std::string name);
    WorkStatus work(WorkContext& ctx) override;
};

/// Embeds a real stream as complex samples with zero imaginary part.
class RealToComplex : public Block {
public:
    explicit RealToComplex(std::string name);
    WorkStatus work(WorkContext& ctx) override;
};

/// Finite source backed by an in-memory buffer of items.
class VectorSource : public Block {
public:
    VectorSource(std::string name, ItemKind kind, std::vector<std::byte> data);

    template <typename T>
    static std::vector<std::byte> pack(const std::vector<T>& v) {
        std::vector<std::byte> b(v.size() * sizeof(T));
        if (!b.empty()) std::memcpy(b.data(), v.data(), b.size());
        return b;
    }

    WorkStatus work(WorkContext& ctx) override;

private:
    std::size_t item_bytes_;
    std::vector<std::byte> data_;
    std::size_t offset_ = 0;  // bytes already emitted
};

/// Sink that appends everything it sees to an in-memory buffer.
class VectorSink : public Block {
public:
    VectorSink(std::string name, ItemKind kind);

    const std::vector<std::byte>& data() const { return data_; }
    std::size_t item_count() const { return data_.size() / item_bytes_; }

    template <typename T>
    std::vector<T> as() const {
        std::vector<T> v(data_.size() / sizeof(T));
        if (!v.empty()) std::memcpy(v.data(), data_.data(), v.size() * sizeof(T));
        return v;
    }

    WorkStatus work(WorkContext& ctx) override;

private:
    std::size_t item_bytes_;
    std::vector<std::byte> data_;
};

/// Per-item N-point transform over cvec(N) vector items. Without a
/// backend the built-in float transform runs; with one, an alternate
/// engine (e.g. a modeled hardware device) substitutes without changing
/// the graph topology. The backend is borrowed, not owned, and must
/// outlive the block; its accumulated modeled offload time is surfaced
/// as the "modeled_offload_s" metric.
class FftStage : public Block {
public:
    FftStage(std::string name, std::uint32_t n, FftDirection direction,
             FftBackend* backend = nullptr);
    WorkStatus work(WorkContext& ctx) override;
    std::vector<std::pair<std::string, double>> extra_metrics() const override;

    const char* backend_name() const { return backend_ ? backend_->name() : "builtin"; }

private:
    std::uint32_t n_;
    FftBackend* backend_;
    Fft plan_;
};

/// Sink that counts items and discards them.
class NullSink : public Block {
public:
    NullSink(std::string name, ItemKind kind);
    std::uint64_t count() const { return count_; }
    WorkStatus work(WorkContext& ctx) override;

private:
    std::size_t item_bytes_;
    std::uint64_t count_ = 0;
};

}  // namespace sdr::dsp
