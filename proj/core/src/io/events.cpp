// SPDX-License-Identifier: Apache-2.0
#include "sdr/io/events.hpp"

#include <fstream>

#include "json.hpp"
#include "sdr/wifi/params.hpp"

namespace sdr::io {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(bytes.size() * 2, '0');
    for (std::size_t n = 0; n < bytes.size(); ++n) {
        s[2 * n] = digits[bytes[n] >> 4];
        s[2 * n + 1] = digits[bytes[n] & 0xF];
    }
    return s;
}

std::vector<std::uint8_t> from_hex(const std::string& hex) {
    if (hex.size() % 2 != 0) throw IoError("hex string has odd length");
    std::vector<std::uint8_t> out(hex.size() / 2);
    for (std::size_t n = 0; n < out.size(); ++n) {
        const int hi = hex_digit(hex[2 * n]);
        const int lo = hex_digit(hex[2 * n + 1]);
        if (hi < 0 || lo < 0) throw IoError("invalid hex digit in: " + hex);
        out[n] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

void write_manifest(const std::string& path, const std::vector<std::vector<std::uint8_t>>& psdus) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    for (const auto& p : psdus) f << to_hex(p) << "\n";
    if (!f) throw IoError("write failed: " + path);
}

std::vector<std::vector<std::uint8_t>> read_manifest(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::vector<std::vector<std::uint8_t>> out;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(from_hex(line));
    }
    return out;
}

std::string event_to_json(const wifi::FrameEvent& ev) {
    nlohmann::ordered_json j;
    j["start_index"] = static_cast<std::uint64_t>(ev.start_index);
    j["mcs"] = ev.mcs ? ev.mcs->str() : "unknown";
    j["mcs_index"] =
        static_cast<std::uint64_t>(ev.mcs ? ev.mcs->index() : wifi::Mcs::all().size());
    j["length"] = static_cast<std::uint64_t>(ev.psdu.size());
    j["fcs_ok"] = ev.fcs_ok;
    j["cfo_hz"] = ev.cfo_hz;
    j["psdu"] = to_hex(ev.psdu);
    return j.dump();
}

wifi::FrameEvent event_from_json(const std::string& line) {
    try {
        const auto j = nlohmann::json::parse(line);
        wifi::FrameEvent ev;
        ev.start_index = j.at("start_index").get<std::uint64_t>();
        const auto idx = j.at("mcs_index").get<std::uint64_t>();
        if (idx >= wifi::Mcs::all().size()) throw IoError("mcs_index out of range");
        ev.mcs = &wifi::Mcs::all()[idx];
        ev.fcs_ok = j.at("fcs_ok").get<bool>();
        ev.cfo_hz = j.at("cfo_hz").get<double>();
        ev.psdu = from_hex(j.at("psdu").get<std::string>());
        if (j.contains("length") && j.at("length").get<std::uint64_t>() != ev.psdu.size())
            throw IoError("length field does not match psdu");
        return ev;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed event line: ") + e.what());
    }
}

void write_events(const std::string& path, std::span<const wifi::FrameEvent> events) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw IoError("cannot open for writing: " + path);
    for (const auto& ev : events) f << event_to_json(ev) << "\n";
    if (!f) throw IoError("write failed: " + path);
}

std::vector<wifi::FrameEvent> read_events(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open: " + path);
    std::vector<wifi::FrameEvent> out;
    std::string line;
    while (std::getline(f, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        out.push_back(event_from_json(line));
    }
    return out;
}

}  // namespace sdr::io
