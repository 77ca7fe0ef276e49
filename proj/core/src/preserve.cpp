#include "tcsp/preserve.hpp"

#include <algorithm>
#include <array>

#include "tcsp/config.hpp"
#include "tcsp/error.hpp"

namespace tcsp {

std::string PreservationWitness::to_string() const {
    std::string out;
    if (!relation.empty()) out += relation + ": ";
    out += "s=" + s.to_string() + " t=" + t.to_string() + " " + arrangement.to_string() +
           " image=" + image.to_string();
    return out;
}

namespace {

// Dense ranks of up to 15 scalar keys, packed into the WeakOrder key format.
uint64_t packed_ranks(const std::array<int64_t, 16>& keys, int n) {
    std::array<int, 16> idx;
    for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
    std::sort(idx.begin(), idx.begin() + n,
              [&](int a, int b) { return keys[static_cast<size_t>(a)] < keys[static_cast<size_t>(b)]; });
    uint64_t packed = 0;
    int rank = 0;
    for (int k = 0; k < n; ++k) {
        if (k > 0 && keys[static_cast<size_t>(idx[static_cast<size_t>(k)])] !=
                         keys[static_cast<size_t>(idx[static_cast<size_t>(k - 1)])]) {
            ++rank;
        }
        packed |= static_cast<uint64_t>(rank) << (4 * idx[static_cast<size_t>(k)]);
    }
    return packed;
}

WeakOrder unpack(uint64_t packed, int n) {
    std::vector<int> ranks(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ranks[static_cast<size_t>(i)] = static_cast<int>((packed >> (4 * i)) & 0xf);
    return WeakOrder(std::move(ranks));
}

} // namespace

PreservationResult preserves(OpSpec op, const TemporalRelation& R) {
    if (R.arity() > Config::global().max_arity) {
        throw CapExceeded("preserves: relation arity exceeds the configured cap");
    }
    const int n = R.arity();
    PreservationResult result{true, std::nullopt};
    for (const auto& s : R.orbits()) {
        for (const auto& t : R.orbits()) {
            const int ks = s.block_count();
            const int kt = t.block_count();
            bool completed = for_each_interleaving(ks, kt, [&](const Interleaving& iv) {
                const int cuts = op.needs_marker() ? marker_cut_count(ks) : 1;
                for (int cut = 0; cut < cuts; ++cut) {
                    std::optional<int> theta;
                    if (op.needs_marker()) theta = marker_threshold(iv.left, cut);
                    std::array<int64_t, 16> keys;
                    for (int i = 0; i < n; ++i) {
                        int x = iv.left[static_cast<size_t>(s.rank(i))];
                        int y = iv.right[static_cast<size_t>(t.rank(i))];
                        keys[static_cast<size_t>(i)] = op_key(op, x, y, theta);
                    }
                    uint64_t image = packed_ranks(keys, n);
                    if (!R.contains_key(image)) {
                        PreservationWitness w;
                        w.s = s;
                        w.t = t;
                        w.arrangement = iv;
                        if (op.needs_marker()) w.arrangement.marker_cut = cut;
                        w.image = unpack(image, n);
                        result = {false, std::move(w)};
                        return false;
                    }
                }
                return true;
            });
            if (!completed) return result;
        }
    }
    return result;
}

PreservationResult preserves(OpSpec op, const TemporalStructure& A) {
    for (const auto& rel : A.relations()) {
        auto r = preserves(op, rel);
        if (!r.preserved) {
            r.witness->relation = rel.name();
            return r;
        }
    }
    return {true, std::nullopt};
}

bool preserved_by_all_permutations(const TemporalRelation& R) {
    for (const auto& w : R.orbits()) {
        const int b = w.block_count();
        std::vector<int> perm(static_cast<size_t>(b));
        for (int i = 0; i < b; ++i) perm[static_cast<size_t>(i)] = i;
        do {
            std::vector<int> ranks(static_cast<size_t>(w.size()));
            for (int i = 0; i < w.size(); ++i) {
                ranks[static_cast<size_t>(i)] = perm[static_cast<size_t>(w.rank(i))];
            }
            if (!R.contains(WeakOrder(std::move(ranks)))) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return true;
}

bool preserved_by_all_permutations(const TemporalStructure& A) {
    for (const auto& rel : A.relations()) {
        if (!preserved_by_all_permutations(rel)) return false;
    }
    return true;
}

bool has_constant_polymorphism(const TemporalStructure& A) {
    for (const auto& rel : A.relations()) {
        if (rel.is_empty()) continue;
        std::vector<int> zeros(static_cast<size_t>(rel.arity()), 0);
        if (!rel.contains(WeakOrder(std::move(zeros)))) return false;
    }
    return true;
}

bool mi_from_mix_grid_check() {
    ConcreteMixTable mix;
    auto f = [&](int x, int y) { return mix(mix(x, y), 3 * y); };
    OpSpec mi{OpName::mi, false};
    for (int x1 = 0; x1 <= 3; ++x1) {
        for (int y1 = 0; y1 <= 3; ++y1) {
            for (int x2 = 0; x2 <= 3; ++x2) {
                for (int y2 = 0; y2 <= 3; ++y2) {
                    int a = f(x1, y1);
                    int b = f(x2, y2);
                    Ord numeric = a < b ? Ord::less : (a > b ? Ord::greater : Ord::equal);
                    if (numeric != compare(mi, {x1, y1}, {x2, y2})) return false;
                }
            }
        }
    }
    return true;
}

} // namespace tcsp
