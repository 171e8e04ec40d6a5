// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sdr/flow_graph.hpp"

namespace sdr::profiler {

struct UtilizationEntry {
    std::string name;
    std::uint64_t calls = 0;
    std::uint64_t time_ns = 0;
    std::uint64_t cycles = 0;
    double pct = 0.0;  ///< share of total cycles, full precision
};

/// Per-block share of total accumulated cycles, ordered by share
/// descending with name-ascending tiebreak.
struct UtilizationReport {
    std::uint64_t nominal_hz = 0;
    std::uint64_t total_cycles = 0;
    bool zero_total = false;  ///< no work recorded; all shares zero
    std::vector<UtilizationEntry> blocks;
};

UtilizationReport utilization(const CounterSnapshot& snapshot);

struct BufferEntry {
    std::string name;
    std::size_t capacity = 0;    // items
    std::size_t high_water = 0;  // items
    double pct = 0.0;            // high_water / capacity * 100
    std::uint64_t bytes_at_high_water = 0;
};

struct BufferReport {
    std::vector<BufferEntry> edges;
};

BufferReport buffers(const RunReport& run);

/// Everything needed from one run to compare against another.
struct ProfileData {
    CounterSnapshot snapshot;
    std::vector<EdgeStats> edges;
};

ProfileData profile_data(const RunReport& run);

struct ComparisonBlockRow {
    std::string name;
    std::uint64_t cycles_a = 0, cycles_b = 0;
    std::int64_t delta_cycles = 0;  ///< b - a; negative = B cheaper
    double delta_pct = 0.0;         ///< 100 * (b - a) / a; 0 when a == 0
    double modeled_offload_a_s = 0.0, modeled_offload_b_s = 0.0;
};

struct ComparisonEdgeRow {
    std::string name;
    std::size_t high_water_a = 0, high_water_b = 0;
    std::int64_t delta_items = 0;  ///< b - a
};

struct ComparisonReport {
    std::vector<ComparisonBlockRow> blocks;  // name ascending
    std::vector<ComparisonEdgeRow> edges;    // name ascending
    std::int64_t total_delta_cycles = 0;
};

/// Pairs runs A and B by block and edge name. Throws
/// std::invalid_argument unless the name sets match exactly.
ComparisonReport compare(const ProfileData& a, const ProfileData& b);

/// Combined run document matching the export schema.
struct ProfileReport {
    UtilizationReport util;
    BufferReport buf;
};

ProfileReport make_report(const RunReport& run);

/// Canonical exports. JSON schema (schema_version 1):
///   {"schema_version":1,"nominal_hz":N,
///    "blocks":[{"name","calls","time_ns","cycles","pct"}...],
///    "edges":[{"name","capacity","high_water","pct"}...]}
/// Percents carry exactly two decimals in both formats. CSV columns:
///   type,name,calls,time_ns,cycles,pct,capacity,high_water
/// Both exports re-serialize byte-identically after a parse.
std::string export_json(const ProfileReport& report);
std::string export_csv(const ProfileReport& report);
ProfileReport parse_json(const std::string& text);
ProfileReport parse_csv(const std::string& text);

/// Comparison export. JSON schema (schema_version 1): blocks rows carry
/// cycles_a/b, delta_cycles, delta_pct and the modeled offload seconds
/// per backend; edge rows carry high-water marks and their delta.
std::string export_comparison_json(const ComparisonReport& report);
std::string export_comparison_csv(const ComparisonReport& report);

}  // namespace sdr::profiler
