#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tcsp/weak_order.hpp"

namespace tcsp {

enum class Ord { less, equal, greater };

Ord flip(Ord o);

enum class OpName { min, lex, ll, pp, mi, mx, mix, proj1, proj2 };

// Symbolic description of a canonical binary operation on the dense order.
// The operation is specified only up to the weak linear order it induces on
// pairs; ll and pp additionally depend on where 0 sits relative to the first
// argument, which callers supply as an explicit marker.
struct OpSpec {
    OpName name = OpName::min;
    bool dual = false;

    bool needs_marker() const { return name == OpName::ll || name == OpName::pp; }

    std::string to_string() const; // "min", "dual-min", "ll", "dll", "dpp", ...
    static OpSpec parse(const std::string& text);

    bool operator==(const OpSpec&) const = default;
};

// The eight operations of the tractability dichotomy, in battery order.
std::vector<OpSpec> dichotomy_ops();

// Scalar key whose integer order realizes the operation's weak order on
// pairs. marker is the first-argument threshold: values <= marker count as
// the nonpositive side (for duals the threshold is reflected internally).
int64_t op_key(OpSpec op, int x, int y, std::optional<int> marker = std::nullopt);

// Three-way comparison of the operation's values on two argument pairs.
// A marker is required exactly for ll/pp and their duals.
Ord compare(OpSpec op, std::pair<int, int> p, std::pair<int, int> q,
            std::optional<int> marker = std::nullopt);

// Fixed integer realization of mix on non-negative integers with
// gamma(x)=3x, alpha(x)=3x+1, beta(x)=3x+2. Restricted to {0..3}^2 this is
// exactly the published value table.
class ConcreteMixTable {
public:
    int operator()(int x, int y) const;
};

// A weak order on the disjoint union of the two argument orbits' blocks:
// combined ranks per block, strictly increasing per side, jointly covering
// 0..m-1. marker_cut positions the sign threshold on the first argument's
// block chain (see preserve.hpp for the enumeration).
struct Interleaving {
    std::vector<int> left;
    std::vector<int> right;
    std::optional<int> marker_cut;

    std::string to_string() const;
};

// Enumerates every interleaving of ks left and kt right blocks (without
// markers) in a fixed deterministic order. The callback returns false to
// stop the enumeration; for_each_interleaving returns false if it stopped.
template <typename F>
bool for_each_interleaving(int ks, int kt, F&& fn) {
    Interleaving iv;
    iv.left.resize(static_cast<size_t>(ks));
    iv.right.resize(static_cast<size_t>(kt));
    auto rec = [&](auto&& self, int i, int j, int r) -> bool {
        if (i == ks && j == kt) {
            return fn(const_cast<const Interleaving&>(iv));
        }
        if (i < ks) {
            iv.left[static_cast<size_t>(i)] = r;
            if (!self(self, i + 1, j, r + 1)) return false;
        }
        if (j < kt) {
            iv.right[static_cast<size_t>(j)] = r;
            if (!self(self, i, j + 1, r + 1)) return false;
        }
        if (i < ks && j < kt) {
            iv.left[static_cast<size_t>(i)] = r;
            iv.right[static_cast<size_t>(j)] = r;
            if (!self(self, i + 1, j + 1, r + 1)) return false;
        }
        return true;
    };
    return rec(rec, 0, 0, 0);
}

// Number of marker cut positions enumerated for a left chain of ks blocks;
// cut c in [0, ks+1] translates to a threshold via marker_threshold.
int marker_cut_count(int ks);
int marker_threshold(const std::vector<int>& left, int cut);

// Orbit of the componentwise image of representatives of s and t arranged
// according to the interleaving. Throws ContractError if the interleaving is
// inconsistent or the marker is missing/spurious.
WeakOrder apply_binary(OpSpec op, const WeakOrder& s, const WeakOrder& t, const Interleaving& iv);

// Image orbit for concrete integer representatives; the sign threshold for
// ll/pp is the actual zero of the value scale.
WeakOrder apply_binary_values(OpSpec op, std::span<const int> a, std::span<const int> b);

} // namespace tcsp
