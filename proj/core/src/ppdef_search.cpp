#include "tcsp/ppdef_search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "tcsp/builtins.hpp"
#include "tcsp/cnf.hpp"
#include "tcsp/config.hpp"
#include "tcsp/error.hpp"

namespace tcsp {

namespace {

using Bits = std::vector<uint64_t>;

Bits make_bits(size_t n, bool value) {
    Bits b((n + 63) / 64, value ? ~uint64_t{0} : 0);
    if (value && n % 64) b.back() = (uint64_t{1} << (n % 64)) - 1;
    return b;
}

void clear_bit(Bits& b, size_t i) { b[i / 64] &= ~(uint64_t{1} << (i % 64)); }
bool test_bit(const Bits& b, size_t i) { return (b[i / 64] >> (i % 64)) & 1; }

Bits and_bits(const Bits& a, const Bits& b) {
    Bits out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] & b[i];
    return out;
}

uint64_t hash_bits(const Bits& b) {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t w : b) {
        h ^= w;
        h *= 1099511628211ull;
    }
    return h;
}

struct AtomCandidate {
    PPAtom atom;
    Bits sat;
};

struct Searcher {
    size_t order_count;
    std::vector<AtomCandidate> atoms;
    std::vector<uint64_t> free_key;             // free-orbit key per weak order index
    std::set<uint64_t> target_keys;
    std::unordered_map<uint64_t, int> visited;  // state hash -> max remaining depth seen
    std::optional<std::chrono::steady_clock::time_point> deadline;
    bool timed_out = false;

    bool projection_status(const Bits& state, bool& exact) const {
        std::set<uint64_t> proj;
        for (size_t i = 0; i < order_count; ++i) {
            if (test_bit(state, i)) proj.insert(free_key[i]);
        }
        for (uint64_t k : target_keys) {
            if (!proj.count(k)) return false; // lost a target orbit
        }
        exact = proj.size() == target_keys.size();
        return true;
    }

    std::optional<std::vector<size_t>> dfs(const Bits& state, size_t first, int remaining) {
        if (deadline && std::chrono::steady_clock::now() > *deadline) {
            timed_out = true;
            return std::nullopt;
        }
        bool exact = false;
        if (!projection_status(state, exact)) return std::nullopt;
        if (exact) return std::vector<size_t>{};
        if (remaining == 0) return std::nullopt;
        uint64_t h = hash_bits(state);
        auto it = visited.find(h);
        if (it != visited.end() && it->second >= remaining) return std::nullopt;
        visited[h] = remaining;
        for (size_t ai = first; ai < atoms.size(); ++ai) {
            Bits next = and_bits(state, atoms[ai].sat);
            if (next == state) continue;
            auto sub = dfs(next, ai + 1, remaining - 1);
            if (timed_out) return std::nullopt;
            if (sub) {
                sub->insert(sub->begin(), ai);
                return sub;
            }
        }
        return std::nullopt;
    }
};

} // namespace

std::optional<PPFormula> bounded_ppdef_search(const TemporalStructure& a, const TemporalRelation& target,
                                              const PpdefSearchOptions& options) {
    int arity = target.arity();
    int max_b = std::min(options.max_bound_vars, Config::global().max_eval_vars - arity);
    for (int b = 0; b <= max_b; ++b) {
        int m = arity + b;
        auto orders = enumerate_weak_orders(m);
        Searcher s;
        s.order_count = orders.size();
        s.deadline = options.deadline;
        std::vector<int> free_idx(static_cast<size_t>(arity));
        for (int i = 0; i < arity; ++i) free_idx[static_cast<size_t>(i)] = i;
        for (const auto& w : orders) {
            s.free_key.push_back(w.restrict(free_idx).key());
        }
        for (const auto& w : target.orbits()) s.target_keys.insert(w.key());

        // Candidate atoms: structure relations then equality, tuples in lex
        // order; trivially-true atoms and duplicate satisfaction sets are
        // dropped (keeping the first).
        std::set<Bits> seen_sets;
        auto add_atoms = [&](const std::string& name, const TemporalRelation& rel) {
            int k = rel.arity();
            std::vector<int> tuple(static_cast<size_t>(k), 0);
            while (true) {
                Bits sat = make_bits(orders.size(), false);
                bool full = true;
                for (size_t oi = 0; oi < orders.size(); ++oi) {
                    if (rel.contains(orders[oi].restrict(tuple))) {
                        sat[oi / 64] |= uint64_t{1} << (oi % 64);
                    } else {
                        full = false;
                    }
                }
                if (!full && seen_sets.insert(sat).second) {
                    s.atoms.push_back({PPAtom{name, tuple}, std::move(sat)});
                }
                int i = k - 1;
                while (i >= 0 && tuple[static_cast<size_t>(i)] == m - 1) {
                    tuple[static_cast<size_t>(i)] = 0;
                    --i;
                }
                if (i < 0) break;
                ++tuple[static_cast<size_t>(i)];
            }
        };
        for (const auto& rel : a.relations()) add_atoms(rel.name(), rel);
        add_atoms("=", builtin("Eq"));

        Bits all = make_bits(orders.size(), true);
        for (int depth = 1; depth <= options.max_atoms; ++depth) {
            s.visited.clear();
            auto picks = s.dfs(all, 0, depth);
            if (picks) {
                PPFormula f;
                f.num_free = arity;
                f.vars = default_variables(arity);
                for (int i = 0; i < b; ++i) f.vars.push_back("h" + std::to_string(i + 1));
                for (size_t ai : *picks) f.atoms.push_back(s.atoms[ai].atom);
                return f;
            }
            if (s.timed_out) return std::nullopt;
        }
    }
    return std::nullopt;
}

} // namespace tcsp
