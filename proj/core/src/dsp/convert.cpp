// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "sdr/dsp/blocks.hpp"

namespace sdr::dsp {

StreamToVector::StreamToVector(std::string name, std::uint32_t n)
    : Block(std::move(name)), n_(n) {
    if (n < 1) throw std::invalid_argument("vector size must be >= 1");
    add_input({"in", ItemKind::complex32(), n});
    add_output({"out", ItemKind::cvec(n)});
}

WorkStatus StreamToVector::work(WorkContext& ctx) {
    auto& in = ctx.in[0];
    auto& out = ctx.out[0];
    const std::size_t groups =
        std::min(in.items(sizeof(cfloat)) / n_, out.items(sizeof(cfloat) * n_));
    const std::size_t bytes = groups * n_ * sizeof(cfloat);
    if (bytes) std::memcpy(out.raw.data(), in.raw.data(), bytes);
    in.consumed = groups * n_;
    out.produced = groups;
    return WorkStatus::Ok;
}

VectorToStream::VectorToStream(std::string name, std::uint32_t n)
    : Block(std::move(name)), n_(n) {
    if (n < 1) throw std::invalid_argument("vector size must be >= 1");
    add_input({"in", ItemKind::cvec(n)});
    add_output({"out", ItemKind::complex32(), n});
}

WorkStatus VectorToStream::work(WorkContext& ctx) {
    auto& in = ctx.in[0];
    auto& out = ctx.out[0];
    const std::size_t groups =
        std::min(in.items(sizeof(cfloat) * n_), out.items(sizeof(cfloat)) / n_);
    const std::size_t bytes = groups * n_ * sizeof(cfloat);
    if (bytes) std::memcpy(out.raw.data(), in.raw.data(), bytes);
    in.consumed = groups;
    out.produced = groups * n_;
    return WorkStatus::Ok;
}

IntToFloat::IntToFloat(std::string name, double scale) : Block(std::move(name)), scale_(scale) {
    if (scale == 0.0) throw std::invalid_argument("scale must be nonzero");
    add_input({"in", ItemKind::int32()});
    add_output({"out", ItemKind::real32()});
}

WorkStatus IntToFloat::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<std::int32_t>();
    auto out = ctx.out[0].as<float>();
    const std::size_t n = std::min(in.size(), out.size());
    for (std::size_t i = 0; i < n; ++i)
        out[i] = static_cast<float>(static_cast<double>(in[i]) / scale_);
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

ComplexToReal::ComplexToReal(std::string name) : Block(std::move(name)) {
    add_input({"in", ItemKind::complex32()});
    add_output({"out", ItemKind::real32()});
}

WorkStatus ComplexToReal::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<cfloat>();
    auto out = ctx.out[0].as<float>();
    const std::size_t n = std::min(in.size(), out.size());
    for (std::size_t i = 0; i < n; ++i) out[i] = in[i].real();
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

RealToComplex::RealToComplex(std::string name) : Block(std::move(name)) {
    add_input({"in", ItemKind::real32()});
    add_output({"out", ItemKind::complex32()});
}

WorkStatus RealToComplex::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<float>();
    auto out = ctx.out[0].as<cfloat>();
    const std::size_t n = std::min(in.size(), out.size());
    for (std::size_t i = 0; i < n; ++i) out[i] = {in[i], 0.0f};
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

FloatToInt::FloatToInt(std::string name, double scale) : Block(std::move(name)), scale_(scale) {
    if (scale == 0.0) throw std::invalid_argument("scale must be nonzero");
    add_input({"in", ItemKind::real32()});
    add_output({"out", ItemKind::int32()});
}

WorkStatus FloatToInt::work(WorkContext& ctx) {
    auto in = ctx.in[0].as<float>();
    auto out = ctx.out[0].as<std::int32_t>();
    const std::size_t n = std::min(in.size(), out.size());
    for (std::size_t i = 0; i < n; ++i) {
        const double r = std::nearbyint(static_cast<double>(in[i]) * scale_);
        out[i] = static_cast<std::int32_t>(std::clamp(r, -2147483648.0, 2147483647.0));
    }
    ctx.in[0].consumed = n;
    ctx.out[0].produced = n;
    return WorkStatus::Ok;
}

}  // namespace sdr::dsp
