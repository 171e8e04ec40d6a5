// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sdr/types.hpp"

namespace sdr {

/// Bounded single-producer single-consumer stream buffer.
///
/// Capacity is rounded up to a power of two (items). Read and write
/// positions are monotonically increasing 64-bit item counters, so
/// occupancy is always `write - read` and total throughput is available
/// without extra counters. Exactly one thread may produce and one may
/// consume; occupancy queries from other threads are snapshots.
class RingBuffer {
public:
    RingBuffer(ItemKind kind, std::size_t capacity_items);

    RingBuffer(const RingBuffer&) = delete;
    RingBuffer& operator=(const RingBuffer&) = delete;

    ItemKind kind() const { return kind_; }
    std::size_t capacity() const { return capacity_; }

    // -- producer side --
    std::size_t writable() const;
    /// Largest contiguous writable region (may be smaller than writable()
    /// when the write position is near the wrap point).
    std::span<std::byte> write_window();
    void commit_write(std::size_t items);
    void set_eof() { eof_.store(true, std::memory_order_release); }

    /// Copies `items` pending items into the ring without committing;
    /// used when a caller needs a contiguous window across the wrap point.
    void poke(const std::byte* src, std::size_t items);

    // -- consumer side --
    std::size_t readable() const;
    std::span<const std::byte> read_window() const;
    void commit_read(std::size_t items);
    /// Copies the next `items` readable items out without committing.
    void peek(std::byte* dst, std::size_t items) const;
    /// Consumer will never read again; producer-side writes are discarded.
    void abandon() { abandoned_.store(true, std::memory_order_release); }
    bool abandoned() const { return abandoned_.load(std::memory_order_acquire); }
    bool eof() const { return eof_.load(std::memory_order_acquire); }
    /// Producer finished and everything has been drained.
    bool finished() const { return eof() && readable() == 0; }

    // -- observers (any thread) --
    std::uint64_t total_written() const { return write_pos_.load(std::memory_order_acquire); }
    std::uint64_t total_read() const { return read_pos_.load(std::memory_order_acquire); }
    std::size_t occupancy() const;
    std::size_t high_water() const { return high_water_.load(std::memory_order_acquire); }

    static std::size_t round_up_pow2(std::size_t n);

private:
    ItemKind kind_;
    std::size_t capacity_;        // items, power of two
    std::size_t item_bytes_;
    std::vector<std::byte> data_;
    std::atomic<std::uint64_t> read_pos_{0};
    std::atomic<std::uint64_t> write_pos_{0};
    std::atomic<std::size_t> high_water_{0};
    std::atomic<bool> eof_{false};
    std::atomic<bool> abandoned_{false};
};

}  // namespace sdr
