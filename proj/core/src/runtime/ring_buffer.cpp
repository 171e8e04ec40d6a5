// SPDX-License-Identifier: Apache-2.0
#include "sdr/ring_buffer.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace sdr {

std::string ItemKind::str() const {
    switch (cls) {
    case ItemClass::Complex32: return "complex32";
    case ItemClass::Real32: return "real32";
    case ItemClass::Int32: return "int32";
    case ItemClass::Byte: return "byte";
    case ItemClass::ComplexVec: {
        std::ostringstream os;
        os << "cvec" << arity;
        return os.str();
    }
    }
    return "?";
}

std::size_t RingBuffer::round_up_pow2(std::size_t n) {
    if (n < 2) return 2;
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

RingBuffer::RingBuffer(ItemKind kind, std::size_t capacity_items)
    : kind_(kind),
      capacity_(round_up_pow2(capacity_items)),
      item_bytes_(kind.bytes()),
      data_(capacity_ * item_bytes_) {}

std::size_t RingBuffer::writable() const {
    const auto w = write_pos_.load(std::memory_order_relaxed);
    const auto r = read_pos_.load(std::memory_order_acquire);
    return capacity_ - static_cast<std::size_t>(w - r);
}

std::span<std::byte> RingBuffer::write_window() {
    const auto w = write_pos_.load(std::memory_order_relaxed);
    const std::size_t off = static_cast<std::size_t>(w) & (capacity_ - 1);
    const std::size_t contiguous = std::min(writable(), capacity_ - off);
    return {data_.data() + off * item_bytes_, contiguous * item_bytes_};
}

void RingBuffer::commit_write(std::size_t items) {
    assert(items <= writable());
    const auto w = write_pos_.load(std::memory_order_relaxed) + items;
    write_pos_.store(w, std::memory_order_release);
    // Producer-side occupancy estimate uses a possibly stale read position,
    // so it never under-reports; high water stays an upper envelope.
    const auto r = read_pos_.load(std::memory_order_relaxed);
    const auto occ = static_cast<std::size_t>(w - r);
    auto hw = high_water_.load(std::memory_order_relaxed);
    while (occ > hw && !high_water_.compare_exchange_weak(hw, occ, std::memory_order_relaxed)) {
    }
}

void RingBuffer::poke(const std::byte* src, std::size_t items) {
    assert(items <= writable());
    const auto w = write_pos_.load(std::memory_order_relaxed);
    const std::size_t off = static_cast<std::size_t>(w) & (capacity_ - 1);
    const std::size_t first = std::min(items, capacity_ - off);
    std::copy_n(src, first * item_bytes_, data_.data() + off * item_bytes_);
    std::copy_n(src + first * item_bytes_, (items - first) * item_bytes_, data_.data());
}

std::size_t RingBuffer::readable() const {
    const auto w = write_pos_.load(std::memory_order_acquire);
    const auto r = read_pos_.load(std::memory_order_relaxed);
    return static_cast<std::size_t>(w - r);
}

std::span<const std::byte> RingBuffer::read_window() const {
    const auto r = read_pos_.load(std::memory_order_relaxed);
    const std::size_t off = static_cast<std::size_t>(r) & (capacity_ - 1);
    const std::size_t contiguous = std::min(readable(), capacity_ - off);
    return {data_.data() + off * item_bytes_, contiguous * item_bytes_};
}

void RingBuffer::commit_read(std::size_t items) {
    assert(items <= readable());
    read_pos_.store(read_pos_.load(std::memory_order_relaxed) + items, std::memory_order_release);
}

void RingBuffer::peek(std::byte* dst, std::size_t items) const {
    assert(items <= readable());
    const auto r = read_pos_.load(std::memory_order_relaxed);
    const std::size_t off = static_cast<std::size_t>(r) & (capacity_ - 1);
    const std::size_t first = std::min(items, capacity_ - off);
    std::copy_n(data_.data() + off * item_bytes_, first * item_bytes_, dst);
    std::copy_n(data_.data(), (items - first) * item_bytes_, dst + first * item_bytes_);
}

std::size_t RingBuffer::occupancy() const {
    const auto w = write_pos_.load(std::memory_order_acquire);
    const auto r = read_pos_.load(std::memory_order_acquire);
    return static_cast<std::size_t>(w - r);
}

}  // namespace sdr
