#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcsp/relation.hpp"

namespace tcsp {

// A linear subspace of GF(2)^n with a reduced row echelon basis, together
// with the homogeneous system Ax = 0 (the annihilator basis) that it solves.
// Vectors are bitmasks with bit i = coordinate x_{i+1}.
struct GF2System {
    int n = 0;
    std::vector<uint32_t> basis;     // RREF, pivot = lowest set bit, ascending
    std::vector<uint32_t> equations; // RREF basis of the annihilator

    bool contains(uint32_t v) const;
    size_t dimension() const { return basis.size(); }
    std::vector<uint32_t> enumerate() const; // the full solution space, sorted

    std::string to_string() const; // equations rendered as "x1 + x2 = 0; ..."
};

// Reduced row echelon form over GF(2), pivots on the lowest set bits.
std::vector<uint32_t> gf2_rref(std::vector<uint32_t> rows);

// Basis of { e : e . v = 0 for every v in the span of rows }.
std::vector<uint32_t> gf2_annihilator(const std::vector<uint32_t>& rows, int n);

// The span of a set of vectors, as a GF2System.
GF2System gf2_span(const std::vector<uint32_t>& vectors, int n);

// If chi0(R) is closed under vector addition, the system with solution space
// chi0(R); otherwise nullopt ("not linear"). R must be non-empty.
std::optional<GF2System> chi0_system(const TemporalRelation& r);

} // namespace tcsp
