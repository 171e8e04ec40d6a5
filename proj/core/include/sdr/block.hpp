// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sdr/types.hpp"

namespace sdr {

/// One stream port of a block. `min_items` is the smallest window the
/// block can make progress with; the scheduler never offers less while
/// data is still flowing (on upstream EOF whatever is left is offered).
/// An input declared with min_items == 0 is a sparse side channel: it
/// never gates activation and its window always holds everything
/// buffered, exempt from the per-activation chunk cap.
struct PortDesc {
    std::string name;
    ItemKind kind;
    std::size_t min_items = 1;
};

enum class WorkStatus : std::uint8_t {
    Ok,    ///< call again when windows allow
    Done,  ///< block will never produce again (sources: exhausted)
};

struct InputWindow {
    std::span<const std::byte> raw;
    bool eof = false;       ///< upstream finished; `raw` is all that remains
    std::size_t consumed = 0;  ///< set by the block, in items

    template <typename T>
    std::span<const T> as() const {
        return {reinterpret_cast<const T*>(raw.data()), raw.size() / sizeof(T)};
    }
    std::size_t items(std::size_t item_bytes) const { return raw.size() / item_bytes; }
};

struct OutputWindow {
    std::span<std::byte> raw;
    std::size_t produced = 0;  ///< set by the block, in items

    template <typename T>
    std::span<T> as() {
        return {reinterpret_cast<T*>(raw.data()), raw.size() / sizeof(T)};
    }
    std::size_t items(std::size_t item_bytes) const { return raw.size() / item_bytes; }
};

struct WorkContext {
    std::span<InputWindow> in;
    std::span<OutputWindow> out;
};

/// Per-block counters maintained by the scheduler while profiling is
/// enabled. All fields are independently atomic so a snapshot taken
/// concurrently with execution never observes a torn value.
class PerfCounters {
public:
    void configure(std::size_t n_in, std::size_t n_out);
    void reset();

    void on_work(std::span<const std::size_t> consumed,
                 std::span<const std::size_t> produced,
                 std::uint64_t elapsed_ns);

    std::uint64_t work_calls() const { return calls_.load(std::memory_order_acquire); }
    std::uint64_t time_ns() const { return time_ns_.load(std::memory_order_acquire); }
    std::uint64_t items_in(std::size_t port) const { return in_[port].load(std::memory_order_acquire); }
    std::uint64_t items_out(std::size_t port) const { return out_[port].load(std::memory_order_acquire); }
    std::size_t n_in() const { return in_.size(); }
    std::size_t n_out() const { return out_.size(); }

private:
    std::atomic<std::uint64_t> calls_{0};
    std::atomic<std::uint64_t> time_ns_{0};
    std::vector<std::atomic<std::uint64_t>> in_;
    std::vector<std::atomic<std::uint64_t>> out_;
};

/// Stream processing block: reads windows of input items, writes windows
/// of output items. A block instance is never invoked concurrently with
/// itself; all mutable state may live in plain members.
class Block {
public:
    explicit Block(std::string name) : name_(std::move(name)) {}
    virtual ~Block() = default;

    Block(const Block&) = delete;
    Block& operator=(const Block&) = delete;

    const std::string& name() const { return name_; }
    std::span<const PortDesc> inputs() const { return inputs_; }
    std::span<const PortDesc> outputs() const { return outputs_; }

    virtual WorkStatus work(WorkContext& ctx) = 0;

    /// Optional block-specific metrics (e.g. modeled accelerator offload
    /// time) surfaced in counter snapshots. Keys must be stable.
    virtual std::vector<std::pair<std::string, double>> extra_metrics() const { return {}; }

    PerfCounters& counters() { return counters_; }
    const PerfCounters& counters() const { return counters_; }

protected:
    std::size_t add_input(PortDesc p) {
        inputs_.push_back(std::move(p));
        return inputs_.size() - 1;
    }
    std::size_t add_output(PortDesc p) {
        outputs_.push_back(std::move(p));
        return outputs_.size() - 1;
    }

private:
    std::string name_;
    std::vector<PortDesc> inputs_;
    std::vector<PortDesc> outputs_;
    PerfCounters counters_;
};

}  // namespace sdr
