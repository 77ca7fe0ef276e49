#include "tcsp/gf2.hpp"

#include <algorithm>
#include <set>

#include "tcsp/error.hpp"

namespace tcsp {

namespace {

int lowest_bit(uint32_t v) { return __builtin_ctz(v); }

} // namespace

std::vector<uint32_t> gf2_rref(std::vector<uint32_t> rows) {
    // Invariant: basis rows are mutually reduced, one pivot (lowest set bit)
    // per row, and no pivot occurs in any other row.
    std::vector<uint32_t> basis;
    for (uint32_t row : rows) {
        for (uint32_t b : basis) {
            if (row & (uint32_t{1} << lowest_bit(b))) row ^= b;
        }
        if (!row) continue;
        int p = lowest_bit(row);
        for (auto& b : basis) {
            if (b & (uint32_t{1} << p)) b ^= row;
        }
        basis.push_back(row);
    }
    std::sort(basis.begin(), basis.end(),
              [](uint32_t a, uint32_t b) { return lowest_bit(a) < lowest_bit(b); });
    return basis;
}

std::vector<uint32_t> gf2_annihilator(const std::vector<uint32_t>& rows, int n) {
    // Solve B e = 0 where the rows of B span the space.
    auto basis = gf2_rref(rows);
    std::vector<int> pivots;
    for (uint32_t b : basis) pivots.push_back(lowest_bit(b));
    std::vector<uint32_t> out;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) continue;
        uint32_t e = uint32_t{1} << free_col;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] & (uint32_t{1} << free_col)) e |= uint32_t{1} << pivots[i];
        }
        out.push_back(e);
    }
    return gf2_rref(out);
}

GF2System gf2_span(const std::vector<uint32_t>& vectors, int n) {
    GF2System s;
    s.n = n;
    s.basis = gf2_rref(vectors);
    s.equations = gf2_annihilator(s.basis, n);
    return s;
}

bool GF2System::contains(uint32_t v) const {
    for (uint32_t b : basis) {
        if (v & (uint32_t{1} << __builtin_ctz(b))) v ^= b;
    }
    return v == 0;
}

std::vector<uint32_t> GF2System::enumerate() const {
    std::vector<uint32_t> out = {0};
    for (uint32_t b : basis) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) out.push_back(out[i] ^ b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string GF2System::to_string() const {
    if (equations.empty()) return "0 = 0";
    std::string s;
    for (size_t i = 0; i < equations.size(); ++i) {
        if (i) s += "; ";
        bool first = true;
        for (int bit = 0; bit < n; ++bit) {
            if (equations[i] & (uint32_t{1} << bit)) {
                if (!first) s += " + ";
                s += "x" + std::to_string(bit + 1);
                first = false;
            }
        }
        s += " = 0";
    }
    return s;
}

std::optional<GF2System> chi0_system(const TemporalRelation& r) {
    if (r.is_empty()) throw ContractError("chi0_system: relation is empty");
    std::set<uint32_t> space;
    for (const auto& t : chi0(r)) space.insert(t.bits);
    for (uint32_t u : space) {
        for (uint32_t v : space) {
            if (!space.count(u ^ v)) return std::nullopt;
        }
    }
    auto sys = gf2_span(std::vector<uint32_t>(space.begin(), space.end()), r.arity());
    return sys;
}

} // namespace tcsp
