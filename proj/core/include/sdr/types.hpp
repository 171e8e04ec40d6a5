// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sdr {

using cfloat = std::complex<float>;

/// Item type carried by a stream edge. Scalars have arity 1; ComplexVec
/// carries `arity` complex samples per item (fixed for the life of a graph).
enum class ItemClass : std::uint8_t {
    Complex32,
    Real32,
    Int32,
    Byte,
    ComplexVec,
};

struct ItemKind {
    ItemClass cls = ItemClass::Byte;
    std::uint32_t arity = 1;

    static constexpr ItemKind complex32() { return {ItemClass::Complex32, 1}; }
    static constexpr ItemKind real32() { return {ItemClass::Real32, 1}; }
    static constexpr ItemKind int32() { return {ItemClass::Int32, 1}; }
    static constexpr ItemKind byte() { return {ItemClass::Byte, 1}; }
    static ItemKind cvec(std::uint32_t n) {
        if (n < 1) throw std::invalid_argument("vector arity must be >= 1");
        return {ItemClass::ComplexVec, n};
    }

    std::size_t bytes() const {
        switch (cls) {
        case ItemClass::Complex32: return sizeof(cfloat);
        case ItemClass::Real32: return sizeof(float);
        case ItemClass::Int32: return sizeof(std::int32_t);
        case ItemClass::Byte: return 1;
        case ItemClass::ComplexVec: return sizeof(cfloat) * arity;
        }
        return 1;
    }

    bool operator==(const ItemKind& o) const { return cls == o.cls && arity == o.arity; }
    bool operator!=(const ItemKind& o) const { return !(*this == o); }

    std::string str() const;
};

/// Graph construction or validation misuse (bad connect, unknown port, ...).
class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure while a graph is executing (deadlock, block work failure).
class RunError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace sdr
