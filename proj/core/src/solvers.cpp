#include "tcsp/solvers.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>

#include "tcsp/builtins.hpp"
#include "tcsp/config.hpp"
#include "tcsp/error.hpp"
#include "tcsp/forms.hpp"

namespace tcsp {

namespace {

struct ResolvedConstraint {
    const TemporalRelation* rel;
    const std::vector<int>* vars;
};

bool satisfied(const ResolvedConstraint& c, const WeakOrder& w) {
    return c.rel->contains(w.restrict(*c.vars));
}

void check_cap(int n) {
    if (n > Config::global().max_oracle_vars) {
        throw CapExceeded("oracle: instance has more variables than the oracle cap");
    }
    if (n < 1) throw ContractError("oracle: instance has no variables");
}

} // namespace

SolveResult solve_oracle(const Instance& instance) {
    check_cap(instance.num_vars());
    std::vector<ResolvedConstraint> cs;
    cs.reserve(instance.constraints().size());
    for (const auto& c : instance.constraints()) {
        cs.push_back({&instance.resolve(c), &c.vars});
    }
    for (const auto& w : enumerate_weak_orders(instance.num_vars())) {
        bool ok = true;
        for (const auto& c : cs) {
            if (!satisfied(c, w)) {
                ok = false;
                break;
            }
        }
        if (ok) return {true, w};
    }
    return {false, std::nullopt};
}

namespace {

// First linear order on the partition blocks satisfying all constraints, as
// a weak order on the variables; nullopt if none.
std::optional<WeakOrder> side_order(const std::vector<ResolvedConstraint>& cs,
                                    const std::vector<int>& block_of, int blocks, int n) {
    std::vector<int> perm(static_cast<size_t>(blocks));
    for (int i = 0; i < blocks; ++i) perm[static_cast<size_t>(i)] = i;
    do {
        std::vector<int> ranks(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) {
            ranks[static_cast<size_t>(v)] = perm[static_cast<size_t>(block_of[static_cast<size_t>(v)])];
        }
        WeakOrder w(ranks);
        bool ok = true;
        for (const auto& c : cs) {
            if (!satisfied(c, w)) {
                ok = false;
                break;
            }
        }
        if (ok) return w;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

} // namespace

CombinedSolveResult solve_combined_oracle(const CombinedInstance& instance) {
    int n = static_cast<int>(instance.variables.size());
    check_cap(n);
    Instance i1 = instance.side_instance(1);
    Instance i2 = instance.side_instance(2);
    std::vector<ResolvedConstraint> cs1, cs2;
    for (const auto& c : i1.constraints()) cs1.push_back({&i1.resolve(c), &c.vars});
    for (const auto& c : i2.constraints()) cs2.push_back({&i2.resolve(c), &c.vars});

    // set partitions via restricted growth strings
    std::vector<int> rgs(static_cast<size_t>(n), 0);
    while (true) {
        int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
        auto o1 = side_order(cs1, rgs, blocks, n);
        if (o1) {
            auto o2 = side_order(cs2, rgs, blocks, n);
            if (o2) return {true, std::make_pair(*o1, *o2)};
        }
        // next restricted growth string
        int i = n - 1;
        while (i > 0) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[static_cast<size_t>(j)]);
            if (rgs[static_cast<size_t>(i)] <= prefix_max) {
                ++rgs[static_cast<size_t>(i)];
                for (int j = i + 1; j < n; ++j) rgs[static_cast<size_t>(j)] = 0;
                break;
            }
            --i;
        }
        if (i == 0) break;
    }
    return {false, std::nullopt};
}

namespace {

struct MinClause {
    int head;
    std::vector<std::pair<Cmp, int>> lits; // gt or ge only
};

// Min-form synthesis memoized on the relation's content (arity + orbit
// keys); the synthesis is a pure function of the orbit set.
const OrderCNF* cached_min_form(const TemporalRelation& rel) {
    static std::map<std::vector<uint64_t>, std::optional<OrderCNF>> cache;
    static std::mutex mu;
    std::vector<uint64_t> key;
    key.push_back(static_cast<uint64_t>(rel.arity()));
    for (const auto& w : rel.orbits()) key.push_back(w.key());
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it == cache.end()) {
        it = cache.emplace(std::move(key), synthesize_form(rel, Form::min)).first;
    }
    return it->second ? &*it->second : nullptr;
}

// Compiles the instance into min-form clauses over instance variables.
// Throws WrongFragment if some relation admits no min-form definition.
// Returns nullopt (via the bool) if a clause collapses to bottom.
std::pair<bool, std::vector<MinClause>> compile_min(const Instance& instance) {
    std::vector<MinClause> out;
    for (const auto& c : instance.constraints()) {
        const auto& rel = instance.resolve(c);
        const OrderCNF* form = cached_min_form(rel);
        if (!form) {
            throw WrongFragment("solve_min_closed: relation '" + c.rel +
                                "' has no min-form definition");
        }
        for (const auto& clause : form->clauses) {
            MinClause mc;
            mc.head = -1;
            bool trivially_true = false;
            for (const auto& lit : clause.literals) {
                int h = c.vars[static_cast<size_t>(lit.lhs)];
                int v = c.vars[static_cast<size_t>(lit.rhs)];
                mc.head = h;
                if (h == v) {
                    if (lit.cmp == Cmp::ge) trivially_true = true;
                    continue; // x > x is false, drop the literal
                }
                mc.lits.push_back({lit.cmp, v});
            }
            if (trivially_true) continue;
            if (mc.lits.empty()) return {false, {}}; // clause collapsed to bottom
            out.push_back(std::move(mc));
        }
    }
    return {true, out};
}

} // namespace

SolveResult solve_min_closed(const Instance& instance) {
    if (instance.num_vars() < 1) throw ContractError("solve_min_closed: instance has no variables");
    auto [feasible, clauses] = compile_min(instance);
    if (!feasible) return {false, std::nullopt};

    int n = instance.num_vars();
    std::vector<int> level(static_cast<size_t>(n), -1);
    std::vector<bool> remaining_var(static_cast<size_t>(n), true);
    std::vector<bool> active(clauses.size(), true);
    int placed = 0;
    int current = 0;
    while (placed < n) {
        // greatest fixpoint: which remaining variables can sit at the level
        std::vector<bool> in_m = remaining_var;
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t ci = 0; ci < clauses.size(); ++ci) {
                if (!active[ci]) continue;
                int h = clauses[ci].head;
                if (!in_m[static_cast<size_t>(h)]) continue;
                bool has_weak_into_m = false;
                for (const auto& [cmp, v] : clauses[ci].lits) {
                    if (cmp == Cmp::ge && in_m[static_cast<size_t>(v)]) {
                        has_weak_into_m = true;
                        break;
                    }
                }
                if (!has_weak_into_m) {
                    in_m[static_cast<size_t>(h)] = false;
                    changed = true;
                }
            }
        }
        bool empty = true;
        for (int v = 0; v < n; ++v) empty = empty && !in_m[static_cast<size_t>(v)];
        if (empty) return {false, std::nullopt};

        for (int v = 0; v < n; ++v) {
            if (in_m[static_cast<size_t>(v)]) {
                level[static_cast<size_t>(v)] = current;
                remaining_var[static_cast<size_t>(v)] = false;
                ++placed;
            }
        }
        // delete clauses satisfied by the new level
        for (size_t ci = 0; ci < clauses.size(); ++ci) {
            if (!active[ci]) continue;
            int h = clauses[ci].head;
            bool head_in_m = in_m[static_cast<size_t>(h)];
            bool sat = head_in_m; // fixpoint guarantees a weak literal inside M
            for (const auto& [cmp, v] : clauses[ci].lits) {
                if (in_m[static_cast<size_t>(v)] && !head_in_m) sat = true;
            }
            if (sat) active[ci] = false;
        }
        ++current;
    }
    return {true, WeakOrder(level)};
}

} // namespace tcsp
