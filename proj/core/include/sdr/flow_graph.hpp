// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdr/block.hpp"
#include "sdr/ring_buffer.hpp"
#include "sdr/types.hpp"

namespace sdr {

struct ValidationIssue {
    enum class Kind { UnconnectedInput, KindMismatch, Cycle };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool runnable = false;
};

/// Per-block view of the counters at one instant.
struct BlockCounters {
    std::string name;
    std::uint64_t work_calls = 0;
    std::uint64_t time_ns = 0;
    std::uint64_t cycles = 0;  ///< time_ns scaled by the nominal clock
    double avg_cycles_per_call = 0.0;
    std::vector<std::uint64_t> items_in;
    std::vector<std::uint64_t> items_out;
    std::vector<std::pair<std::string, double>> extra;  ///< block-specific metrics
};

struct CounterSnapshot {
    std::uint64_t nominal_hz = 0;
    std::uint64_t timestamp_ns = 0;  ///< since run start
    std::vector<BlockCounters> blocks;
};

struct EdgeStats {
    std::string name;  ///< "src.out0->dst.in0"
    std::size_t capacity = 0;
    std::size_t high_water = 0;
    std::size_t item_bytes = 0;
    std::size_t final_occupancy = 0;
    std::uint64_t total_items = 0;  ///< items that crossed the edge
};

enum class Termination : std::uint8_t {
    SourcesExhausted,
    ItemBudget,
    WallClock,
};

struct RunOptions {
    /// Per-activation cap on items moved through any one port. A block's
    /// declared minimum window always takes precedence over the cap.
    std::size_t chunk_items = 4096;
    int workers = 1;
    bool profiling = true;
    std::uint64_t nominal_hz = 666'000'000;  // ZC702-class ARM core clock
    /// Cap on items produced by each source block (then treated as exhausted).
    std::optional<std::uint64_t> source_item_budget;
    /// Sources are cut off once this much wall time has elapsed; buffered
    /// data still drains.
    std::optional<std::chrono::nanoseconds> wall_clock_budget;
};

struct RunReport {
    CounterSnapshot counters;
    std::vector<EdgeStats> edges;
    std::chrono::nanoseconds elapsed{0};
    Termination termination = Termination::SourcesExhausted;
};

/// Directed acyclic graph of blocks connected by ring-buffered stream
/// edges. Build with add()/connect(), then validate() and run().
class FlowGraph {
public:
    static constexpr std::size_t kDefaultCapacity = 4096;

    FlowGraph() = default;

    /// Registers a block; the graph shares ownership. Returns the argument
    /// for fluent wiring.
    template <typename B>
    std::shared_ptr<B> add(std::shared_ptr<B> block) {
        add_block(block);
        return block;
    }
    template <typename B, typename... Args>
    std::shared_ptr<B> emplace(Args&&... args) {
        auto b = std::make_shared<B>(std::forward<Args>(args)...);
        add_block(b);
        return b;
    }

    /// Connects src output port to dst input port with a ring buffer of
    /// `capacity` items (rounded up to a power of two). Throws GraphError
    /// on kind mismatch, duplicate input connection, or unknown port.
    void connect(const std::shared_ptr<Block>& src, std::size_t out_port,
                 const std::shared_ptr<Block>& dst, std::size_t in_port,
                 std::size_t capacity = kDefaultCapacity);

    ValidationReport validate();

    /// Executes the graph until termination. Requires a prior successful
    /// validate(). Throws RunError on deadlock or block failure.
    RunReport run(const RunOptions& opts = {});

    /// Point-in-time counters; safe to call while run() executes on
    /// another thread. All zero when profiling is disabled.
    CounterSnapshot snapshot_counters() const;

    std::size_t block_count() const { return blocks_.size(); }
    std::span<const std::shared_ptr<Block>> blocks() const { return blocks_; }

private:
    friend class Scheduler;

    struct Edge {
        std::size_t src_block, src_port;
        std::size_t dst_block, dst_port;
        std::unique_ptr<RingBuffer> buffer;
        std::string name;
    };

    void add_block(const std::shared_ptr<Block>& b);
    std::size_t index_of(const std::shared_ptr<Block>& b) const;

    std::vector<std::shared_ptr<Block>> blocks_;
    std::vector<Edge> edges_;
    // edge index per (block, port); SIZE_MAX when unconnected. One edge per
    // port on both sides: no fan-out (see module docs).
    std::vector<std::vector<std::size_t>> in_edge_;
    std::vector<std::vector<std::size_t>> out_edge_;
    bool runnable_ = false;
    std::uint64_t last_nominal_hz_ = 666'000'000;
    std::chrono::steady_clock::time_point run_start_{};
};

}  // namespace sdr
