#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "tcsp/error.hpp"

namespace tcsp {

// Canonical representative of one orbit of n-tuples over the dense linear
// order: the rank vector of the tuple. Rank 0 is the smallest block and the
// ranks of a vector of length n form a contiguous range 0..k-1 with every
// value hit at least once. Two coordinates are equal in the orbit iff their
// ranks coincide.
class WeakOrder {
public:
    WeakOrder() = default;

    // Requires a canonical rank vector; throws ContractError otherwise.
    explicit WeakOrder(std::vector<int> ranks);

    int size() const { return static_cast<int>(ranks_.size()); }
    int rank(int i) const { return ranks_[static_cast<size_t>(i)]; }
    int block_count() const { return blocks_; }
    const std::vector<int8_t>& ranks() const { return ranks_; }

    // Packed 4-bit-per-coordinate encoding; total order used everywhere a
    // deterministic iteration order is needed. Collision-free for n <= 15.
    uint64_t key() const { return key_; }

    // Restriction to a coordinate subsequence, re-canonicalized.
    WeakOrder restrict(std::span<const int> coords) const;

    // Orbit of the reversed order (ranks mirrored top-to-bottom).
    WeakOrder dual() const;

    // Equality kernel: partition id per coordinate with ids assigned by first
    // occurrence. Two weak orders have the same kernel iff they identify
    // exactly the same coordinates.
    std::vector<int> kernel() const;

    bool operator==(const WeakOrder& o) const { return key_ == o.key_ && size() == o.size(); }
    bool operator<(const WeakOrder& o) const {
        return size() != o.size() ? size() < o.size() : key_ < o.key_;
    }

    std::string to_string() const; // e.g. "[0,2,1]"

private:
    std::vector<int8_t> ranks_;
    int blocks_ = 0;
    uint64_t key_ = 0;

    friend WeakOrder orbit_of(std::span<const int> values);
    friend WeakOrder orbit_of(std::span<const double> values);
    friend std::vector<WeakOrder> enumerate_weak_orders(int n);
    static WeakOrder unchecked(std::vector<int8_t> ranks, int blocks);
};

// Rank vector of a tuple of values under its sorted distinct values.
WeakOrder orbit_of(std::span<const int> values);
WeakOrder orbit_of(std::span<const double> values);
WeakOrder orbit_of(std::initializer_list<int> values);

// All canonical rank vectors of length n, sorted by key. The cardinality is
// the n-th ordered Bell number. n = 0 is an invalid arity.
std::vector<WeakOrder> enumerate_weak_orders(int n);

// Min-indicator of an orbit: bit i set iff coordinate i has rank 0.
// Bits are stored little-endian in a mask (bit i = coordinate i).
struct MinTuple {
    uint32_t bits = 0;
    int n = 0;

    bool get(int i) const { return (bits >> i) & 1u; }
    bool operator==(const MinTuple&) const = default;
    bool operator<(const MinTuple& o) const { return bits < o.bits; }
    std::string to_string() const;
};

MinTuple min_tuple(const WeakOrder& orbit);

} // namespace tcsp

template <>
struct std::hash<tcsp::WeakOrder> {
    size_t operator()(const tcsp::WeakOrder& w) const noexcept {
        return std::hash<uint64_t>{}(w.key() * 0x9e3779b97f4a7c15ull + static_cast<uint64_t>(w.size()));
    }
};
