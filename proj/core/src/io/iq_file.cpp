// SPDX-License-Identifier: Apache-2.0
#include "sdr/io/iq_file.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>

#include "json.hpp"

namespace sdr::io {

namespace {

void put_f32le(std::uint8_t* p, float v) {
    const auto u = std::bit_cast<std::uint32_t>(v);
    p[0] = static_cast<std::uint8_t>(u);
    p[1] = static_cast<std::uint8_t>(u >> 8);
    p[2] = static_cast<std::uint8_t>(u >> 16);
    p[3] = static_cast<std::uint8_t>(u >> 24);
}

float get_f32le(const std::uint8_t* p) {
    const std::uint32_t u = static_cast<std::uint32_t>(p[0]) |
                            (static_cast<std::uint32_t>(p[1]) << 8) |
                            (static_cast<std::uint32_t>(p[2]) << 16) |
                            (static_cast<std::uint32_t>(p[3]) << 24);
    return std::bit_cast<float>(u);
}

}  // namespace

void write_iq(const std::string& path, std::span<const cfloat> samples) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    std::vector<std::uint8_t> buf(samples.size() * 8);
    for (std::size_t n = 0; n < samples.size(); ++n) {
        put_f32le(buf.data() + 8 * n, samples[n].real());
        put_f32le(buf.data() + 8 * n + 4, samples[n].imag());
    }
    f.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size()));
    if (!f) throw IoError("write failed: " + path);
}

std::vector<cfloat> read_iq(const std::string& path) {
    std::ifstream f(path, std::ios::binary | std::ios::ate);
    if (!f) throw IoError("cannot open: " + path);
    const auto bytes = static_cast<std::uint64_t>(f.tellg());
    if (bytes % 8 != 0)
        throw IoError("malformed IQ file (length not a multiple of 8 bytes): " + path);
    f.seekg(0);
    std::vector<std::uint8_t> buf(bytes);
    if (bytes) f.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(bytes));
    if (!f && bytes) throw IoError("read failed: " + path);
    std::vector<cfloat> out(bytes / 8);
    for (std::size_t n = 0; n < out.size(); ++n) {
        const float i = get_f32le(buf.data() + 8 * n);
        const float q = get_f32le(buf.data() + 8 * n + 4);
        if (!std::isfinite(i) || !std::isfinite(q))
            throw IoError("malformed IQ file (non-finite sample): " + path);
        out[n] = {i, q};
    }
    return out;
}

std::string sidecar_path(const std::string& iq_path) { return iq_path + ".json"; }

void write_sidecar(const std::string& path, const IqSidecar& meta) {
    nlohmann::ordered_json j;
    j["sample_rate_hz"] = meta.sample_rate_hz;
    j["center_freq_hz"] = meta.center_freq_hz;
    j["description"] = meta.description;
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    f << j.dump(2) << "\n";
    if (!f) throw IoError("write failed: " + path);
}

IqSidecar read_sidecar(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    try {
        const auto j = nlohmann::json::parse(f);
        IqSidecar m;
        m.sample_rate_hz = j.at("sample_rate_hz").get<double>();
        m.center_freq_hz = j.at("center_freq_hz").get<double>();
        m.description = j.value("description", std::string{});
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("malformed sidecar " + path + ": " + e.what());
    }
}

}  // namespace sdr::io
