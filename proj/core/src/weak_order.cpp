#include "tcsp/weak_order.hpp"

#include <algorithm>

namespace tcsp {

namespace {

uint64_t pack(const std::vector<int8_t>& ranks) {
    uint64_t k = 0;
    for (size_t i = 0; i < ranks.size(); ++i) {
        k |= static_cast<uint64_t>(ranks[i]) << (4 * i);
    }
    return k;
}

template <typename T>
WeakOrder rank_values(std::span<const T> values) {
    if (values.empty()) {
        throw ContractError("orbit_of: empty tuple");
    }
    std::vector<T> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) - sorted.begin());
    }
    return WeakOrder(std::move(ranks));
}

} // namespace

WeakOrder::WeakOrder(std::vector<int> ranks) {
    if (ranks.empty()) {
        throw ContractError("WeakOrder: empty rank vector");
    }
    if (ranks.size() > 15) {
        throw ContractError("WeakOrder: more than 15 coordinates");
    }
    int top = 0;
    for (int r : ranks) {
        if (r < 0) throw ContractError("WeakOrder: negative rank");
        top = std::max(top, r);
    }
    std::vector<bool> seen(static_cast<size_t>(top) + 1, false);
    for (int r : ranks) seen[static_cast<size_t>(r)] = true;
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
        throw ContractError("WeakOrder: ranks are not contiguous from 0");
    }
    ranks_.assign(ranks.begin(), ranks.end());
    blocks_ = top + 1;
    key_ = pack(ranks_);
}

WeakOrder WeakOrder::unchecked(std::vector<int8_t> ranks, int blocks) {
    WeakOrder w;
    w.ranks_ = std::move(ranks);
    w.blocks_ = blocks;
    w.key_ = pack(w.ranks_);
    return w;
}

WeakOrder WeakOrder::restrict(std::span<const int> coords) const {
    std::vector<int> sub(coords.size());
    for (size_t i = 0; i < coords.size(); ++i) {
        sub[i] = rank(coords[i]);
    }
    return orbit_of(std::span<const int>(sub));
}

WeakOrder WeakOrder::dual() const {
    std::vector<int8_t> rev(ranks_.size());
    for (size_t i = 0; i < ranks_.size(); ++i) {
        rev[i] = static_cast<int8_t>(blocks_ - 1 - ranks_[i]);
    }
    return unchecked(std::move(rev), blocks_);
}

std::vector<int> WeakOrder::kernel() const {
    std::vector<int> first_of_block(static_cast<size_t>(blocks_), -1);
    std::vector<int> ids(ranks_.size());
    int next = 0;
    for (size_t i = 0; i < ranks_.size(); ++i) {
        int& slot = first_of_block[static_cast<size_t>(ranks_[i])];
        if (slot < 0) slot = next++;
        ids[i] = slot;
    }
    return ids;
}

std::string WeakOrder::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < ranks_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(static_cast<int>(ranks_[i]));
    }
    return s + "]";
}

WeakOrder orbit_of(std::span<const int> values) { return rank_values(values); }
WeakOrder orbit_of(std::span<const double> values) { return rank_values(values); }
WeakOrder orbit_of(std::initializer_list<int> values) {
    return orbit_of(std::span<const int>(values.begin(), values.size()));
}

std::vector<WeakOrder> enumerate_weak_orders(int n) {
    if (n < 1) {
        throw ContractError("enumerate_weak_orders: arity must be >= 1");
    }
    if (n > 15) {
        throw CapExceeded("enumerate_weak_orders: arity above representable limit");
    }
    // Grow element by element: a new element goes below all blocks, into an
    // existing block, or between/above blocks (2k+1 choices for k blocks).
    std::vector<std::pair<std::vector<int8_t>, int>> acc = {{{0}, 1}};
    for (int m = 2; m <= n; ++m) {
        std::vector<std::pair<std::vector<int8_t>, int>> next;
        next.reserve(acc.size() * static_cast<size_t>(2 * m - 1));
        for (const auto& [ranks, k] : acc) {
            for (int pos = 0; pos <= 2 * k; ++pos) {
                std::vector<int8_t> r = ranks;
                if (pos % 2 == 1) {
                    // join block pos/2
                    r.push_back(static_cast<int8_t>(pos / 2));
                    next.emplace_back(std::move(r), k);
                } else {
                    // new block before block pos/2; shift the tail up
                    int b = pos / 2;
                    for (auto& x : r) {
                        if (x >= b) ++x;
                    }
                    r.push_back(static_cast<int8_t>(b));
                    next.emplace_back(std::move(r), k + 1);
                }
            }
        }
        acc = std::move(next);
    }
    std::vector<WeakOrder> out;
    out.reserve(acc.size());
    for (auto& [ranks, k] : acc) {
        out.push_back(WeakOrder::unchecked(std::move(ranks), k));
    }
    std::sort(out.begin(), out.end());
    return out;
}

MinTuple min_tuple(const WeakOrder& orbit) {
    MinTuple t;
    t.n = orbit.size();
    for (int i = 0; i < orbit.size(); ++i) {
        if (orbit.rank(i) == 0) t.bits |= 1u << i;
    }
    return t;
}

std::string MinTuple::to_string() const {
    std::string s = "(";
    for (int i = 0; i < n; ++i) {
        if (i) s += ",";
        s += get(i) ? "1" : "0";
    }
    return s + ")";
}

} // namespace tcsp
