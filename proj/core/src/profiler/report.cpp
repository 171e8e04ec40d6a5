// SPDX-License-Identifier: Apache-2.0
#include "sdr/profiler/report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sdr::profiler {

namespace {

std::string fmt_pct(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string fmt_sci(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6e", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", c);
                out += buf;
            } else {
                out += c;
            }
        }
    }
    return out;
}

double find_extra(const BlockCounters& c, const char* key) {
    for (const auto& [k, v] : c.extra)
        if (k == key) return v;
    return 0.0;
}

}  // namespace

UtilizationReport utilization(const CounterSnapshot& snapshot) {
    UtilizationReport rep;
    rep.nominal_hz = snapshot.nominal_hz;
    for (const auto& b : snapshot.blocks) rep.total_cycles += b.cycles;
    rep.zero_total = rep.total_cycles == 0;
    rep.blocks.reserve(snapshot.blocks.size());
    for (const auto& b : snapshot.blocks) {
        UtilizationEntry e;
        e.name = b.name;
        e.calls = b.work_calls;
        e.time_ns = b.time_ns;
        e.cycles = b.cycles;
        e.pct = rep.zero_total ? 0.0
                               : 100.0 * static_cast<double>(b.cycles) /
                                     static_cast<double>(rep.total_cycles);
        rep.blocks.push_back(std::move(e));
    }
    std::sort(rep.blocks.begin(), rep.blocks.end(), [](const auto& x, const auto& y) {
        if (x.cycles != y.cycles) return x.cycles > y.cycles;
        return x.name < y.name;
    });
    return rep;
}

BufferReport buffers(const RunReport& run) {
    BufferReport rep;
    rep.edges.reserve(run.edges.size());
    for (const auto& e : run.edges) {
        BufferEntry be;
        be.name = e.name;
        be.capacity = e.capacity;
        be.high_water = e.high_water;
        be.pct = e.capacity ? 100.0 * static_cast<double>(e.high_water) /
                                  static_cast<double>(e.capacity)
                            : 0.0;
        be.bytes_at_high_water = static_cast<std::uint64_t>(e.high_water) * e.item_bytes;
        rep.edges.push_back(std::move(be));
    }
    return rep;
}

ProfileData profile_data(const RunReport& run) { return {run.counters, run.edges}; }

ComparisonReport compare(const ProfileData& a, const ProfileData& b) {
    auto names_of = [](const ProfileData& d) {
        std::set<std::string> blocks, edges;
        for (const auto& c : d.snapshot.blocks) blocks.insert(c.name);
        for (const auto& e : d.edges) edges.insert(e.name);
        return std::pair{blocks, edges};
    };
    const auto [ba, ea] = names_of(a);
    const auto [bb, eb] = names_of(b);
    if (ba != bb || ea != eb)
        throw std::invalid_argument("comparison requires identical block and edge name sets");

    auto block_of = [](const ProfileData& d, const std::string& name) -> const BlockCounters& {
        for (const auto& c : d.snapshot.blocks)
            if (c.name == name) return c;
        throw std::logic_error("block lookup");
    };
    auto edge_of = [](const ProfileData& d, const std::string& name) -> const EdgeStats& {
        for (const auto& e : d.edges)
            if (e.name == name) return e;
        throw std::logic_error("edge lookup");
    };

    ComparisonReport rep;
    for (const auto& name : ba) {
        const auto& ca = block_of(a, name);
        const auto& cb = block_of(b, name);
        ComparisonBlockRow row;
        row.name = name;
        row.cycles_a = ca.cycles;
        row.cycles_b = cb.cycles;
        row.delta_cycles =
            static_cast<std::int64_t>(cb.cycles) - static_cast<std::int64_t>(ca.cycles);
        row.delta_pct = ca.cycles ? 100.0 * static_cast<double>(row.delta_cycles) /
                                        static_cast<double>(ca.cycles)
                                  : 0.0;
        row.modeled_offload_a_s = find_extra(ca, "modeled_offload_s");
        row.modeled_offload_b_s = find_extra(cb, "modeled_offload_s");
        rep.total_delta_cycles += row.delta_cycles;
        rep.blocks.push_back(std::move(row));
    }
    for (const auto& name : ea) {
        const auto& xa = edge_of(a, name);
        const auto& xb = edge_of(b, name);
        ComparisonEdgeRow row;
        row.name = name;
        row.high_water_a = xa.high_water;
        row.high_water_b = xb.high_water;
        row.delta_items =
            static_cast<std::int64_t>(xb.high_water) - static_cast<std::int64_t>(xa.high_water);
        rep.edges.push_back(std::move(row));
    }
    return rep;
}

ProfileReport make_report(const RunReport& run) {
    return {utilization(run.counters), buffers(run)};
}

std::string export_json(const ProfileReport& report) {
    std::ostringstream os;
    os << "{\"schema_version\":1,\"nominal_hz\":" << report.util.nominal_hz << ",\"blocks\":[";
    bool first = true;
    for (const auto& b : report.util.blocks) {
        if (!first) os << ",";
        first = false;
        os << "{\"name\":\"" << json_escape(b.name) << "\",\"calls\":" << b.calls
           << ",\"time_ns\":" << b.time_ns << ",\"cycles\":" << b.cycles
           << ",\"pct\":" << fmt_pct(b.pct) << "}";
    }
    os << "],\"edges\":[";
    first = true;
    for (const auto& e : report.buf.edges) {
        if (!first) os << ",";
        first = false;
        os << "{\"name\":\"" << json_escape(e.name) << "\",\"capacity\":" << e.capacity
           << ",\"high_water\":" << e.high_water << ",\"pct\":" << fmt_pct(e.pct) << "}";
    }
    os << "]}";
    return os.str();
}

std::string export_csv(const ProfileReport& report) {
    std::ostringstream os;
    os << "type,name,calls,time_ns,cycles,pct,capacity,high_water\n";
    for (const auto& b : report.util.blocks)
        os << "block," << b.name << "," << b.calls << "," << b.time_ns << "," << b.cycles << ","
           << fmt_pct(b.pct) << ",,\n";
    for (const auto& e : report.buf.edges)
        os << "edge," << e.name << ",,,," << fmt_pct(e.pct) << "," << e.capacity << ","
           << e.high_water << "\n";
    return os.str();
}

ProfileReport parse_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (j.at("schema_version").get<int>() != 1)
            throw std::runtime_error("unsupported schema_version");
        ProfileReport rep;
        rep.util.nominal_hz = j.at("nominal_hz").get<std::uint64_t>();
        for (const auto& b : j.at("blocks")) {
            UtilizationEntry e;
            e.name = b.at("name").get<std::string>();
            e.calls = b.at("calls").get<std::uint64_t>();
            e.time_ns = b.at("time_ns").get<std::uint64_t>();
            e.cycles = b.at("cycles").get<std::uint64_t>();
            e.pct = b.at("pct").get<double>();
            rep.util.total_cycles += e.cycles;
            rep.util.blocks.push_back(std::move(e));
        }
        rep.util.zero_total = rep.util.total_cycles == 0;
        for (const auto& x : j.at("edges")) {
            BufferEntry e;
            e.name = x.at("name").get<std::string>();
            e.capacity = x.at("capacity").get<std::size_t>();
            e.high_water = x.at("high_water").get<std::size_t>();
            e.pct = x.at("pct").get<double>();
            rep.buf.edges.push_back(std::move(e));
        }
        return rep;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("invalid profile document: ") + e.what());
    }
}

ProfileReport parse_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line != "type,name,calls,time_ns,cycles,pct,capacity,high_water")
        throw std::runtime_error("invalid profile CSV header");
    ProfileReport rep;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        for (;;) {
            const auto pos = line.find(',', start);
            f.push_back(line.substr(start, pos == std::string::npos ? pos : pos - start));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        if (f.size() != 8) throw std::runtime_error("invalid profile CSV row");
        if (f[0] == "block") {
            UtilizationEntry e;
            e.name = f[1];
            e.calls = std::stoull(f[2]);
            e.time_ns = std::stoull(f[3]);
            e.cycles = std::stoull(f[4]);
            e.pct = std::stod(f[5]);
            rep.util.total_cycles += e.cycles;
            rep.util.blocks.push_back(std::move(e));
        } else if (f[0] == "edge") {
            BufferEntry e;
            e.name = f[1];
            e.pct = std::stod(f[5]);
            e.capacity = std::stoull(f[6]);
            e.high_water = std::stoull(f[7]);
            rep.buf.edges.push_back(std::move(e));
        } else {
            throw std::runtime_error("invalid profile CSV row type");
        }
    }
    rep.util.zero_total = rep.util.total_cycles == 0;
    return rep;
}

std::string export_comparison_json(const ComparisonReport& report) {
    std::ostringstream os;
    os << "{\"schema_version\":1,\"blocks\":[";
    bool first = true;
    for (const auto& b : report.blocks) {
        if (!first) os << ",";
        first = false;
        os << "{\"name\":\"" << json_escape(b.name) << "\",\"cycles_a\":" << b.cycles_a
           << ",\"cycles_b\":" << b.cycles_b << ",\"delta_cycles\":" << b.delta_cycles
           << ",\"delta_pct\":" << fmt_pct(b.delta_pct)
           << ",\"modeled_offload_a_s\":" << fmt_sci(b.modeled_offload_a_s)
           << ",\"modeled_offload_b_s\":" << fmt_sci(b.modeled_offload_b_s) << "}";
    }
    os << "],\"edges\":[";
    first = true;
    for (const auto& e : report.edges) {
        if (!first) os << ",";
        first = false;
        os << "{\"name\":\"" << json_escape(e.name) << "\",\"high_water_a\":" << e.high_water_a
           << ",\"high_water_b\":" << e.high_water_b << ",\"delta_items\":" << e.delta_items
           << "}";
    }
    os << "],\"total_delta_cycles\":" << report.total_delta_cycles << "}";
    return os.str();
}

std::string export_comparison_csv(const ComparisonReport& report) {
    std::ostringstream os;
    os << "type,name,cycles_a,cycles_b,delta_cycles,delta_pct,modeled_offload_a_s,"
          "modeled_offload_b_s,high_water_a,high_water_b,delta_items\n";
    for (const auto& b : report.blocks)
        os << "block," << b.name << "," << b.cycles_a << "," << b.cycles_b << ","
           << b.delta_cycles << "," << fmt_pct(b.delta_pct) << ","
           << fmt_sci(b.modeled_offload_a_s) << "," << fmt_sci(b.modeled_offload_b_s) << ",,,\n";
    for (const auto& e : report.edges)
        os << "edge," << e.name << ",,,,,,," << e.high_water_a << "," << e.high_water_b << ","
           << e.delta_items << "\n";
    os << "total,,,," << report.total_delta_cycles << ",,,,,,\n";
    return os.str();
}

}  // namespace sdr::profiler
