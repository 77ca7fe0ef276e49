#include "tcsp/forms.hpp"

#include <algorithm>
#include <map>

#include "tcsp/error.hpp"

namespace tcsp {

const char* form_name(Form f) {
    switch (f) {
        case Form::pp: return "pp";
        case Form::min: return "min";
        case Form::mi: return "mi";
        case Form::ll: return "ll";
        case Form::mix: return "mix";
    }
    return "?";
}

Form parse_form(const std::string& name) {
    if (name == "pp") return Form::pp;
    if (name == "min") return Form::min;
    if (name == "mi") return Form::mi;
    if (name == "ll") return Form::ll;
    if (name == "mix") return Form::mix;
    throw LookupError("unknown normal form '" + name + "'");
}

namespace {

Cmp flip_cmp(Cmp c) {
    switch (c) {
        case Cmp::lt: return Cmp::gt;
        case Cmp::le: return Cmp::ge;
        case Cmp::gt: return Cmp::lt;
        case Cmp::ge: return Cmp::le;
        default: return c; // eq, ne are symmetric
    }
}

// All literals of a clause oriented to share head h, or nullopt.
std::optional<std::vector<std::pair<Cmp, int>>> oriented(const Clause& clause, int h) {
    std::vector<std::pair<Cmp, int>> lits;
    for (const auto& l : clause.literals) {
        if (l.lhs == h && l.rhs != h) {
            lits.push_back({l.cmp, l.rhs});
        } else if (l.rhs == h && l.lhs != h) {
            lits.push_back({flip_cmp(l.cmp), l.lhs});
        } else {
            return std::nullopt;
        }
    }
    return lits;
}

bool conns_allowed(const std::vector<std::pair<Cmp, int>>& lits, std::initializer_list<Cmp> allowed,
                   int max_ge) {
    int ge = 0;
    for (const auto& [c, v] : lits) {
        if (std::find(allowed.begin(), allowed.end(), c) == allowed.end()) return false;
        if (c == Cmp::ge) ++ge;
    }
    return ge <= max_ge;
}

bool matches_headed(const Clause& clause, int n, std::initializer_list<Cmp> allowed, int max_ge) {
    if (clause.is_false || clause.literals.empty()) return false;
    for (int h = 0; h < n; ++h) {
        auto lits = oriented(clause, h);
        if (lits && conns_allowed(*lits, allowed, max_ge)) return true;
    }
    return false;
}

// x >= y | x > z_1 | ... | x > z_k; returns (x, y, {z_i}). Repeated-variable
// instances of phi-mix drop their degenerate x > x literals, so the z set may
// be empty here; the pairing step reconciles the two halves.
struct MixHalf {
    int x;
    int y;
    std::vector<int> zs;
};

std::optional<MixHalf> mix_pair_half(const Clause& clause, int n) {
    if (clause.is_false) return std::nullopt;
    for (int h = 0; h < n; ++h) {
        auto lits = oriented(clause, h);
        if (!lits) continue;
        MixHalf half;
        half.x = h;
        int ge = 0;
        bool ok = true;
        for (const auto& [c, v] : *lits) {
            if (c == Cmp::ge) {
                ++ge;
                half.y = v;
            } else if (c == Cmp::gt) {
                half.zs.push_back(v);
            } else {
                ok = false;
                break;
            }
        }
        if (ok && ge == 1) {
            std::sort(half.zs.begin(), half.zs.end());
            return half;
        }
    }
    return std::nullopt;
}

// The halves (x >= y | x > zs1) and (y >= x | y > zs2) constitute a
// substitution instance of phi-mix iff the z sets agree outside the heads.
bool halves_pair_up(const MixHalf& a, const MixHalf& b) {
    if (a.x != b.y || a.y != b.x) return false;
    auto strip = [](const std::vector<int>& zs, int head) {
        std::vector<int> out;
        for (int z : zs) {
            if (z != head) out.push_back(z);
        }
        return out;
    };
    // each half's z list is S minus its own head; removing the partner head
    // from both must leave the same core
    return strip(a.zs, a.y) == strip(b.zs, b.y);
}

bool matches_ll_clause(const Clause& clause, int n) {
    if (clause.is_false || clause.literals.empty()) return false;
    // Split candidates: one head with > literals, or a single >= literal, plus
    // pairwise disjoint != literals on other variables.
    std::vector<Literal> neq;
    std::vector<Literal> rest;
    for (const auto& l : clause.literals) {
        (l.cmp == Cmp::ne ? neq : rest).push_back(l);
    }
    std::vector<int> head_vars;
    if (!rest.empty()) {
        bool ok = false;
        for (int h = 0; h < n && !ok; ++h) {
            Clause sub{rest, false};
            auto lits = oriented(sub, h);
            if (!lits) continue;
            bool all_gt = conns_allowed(*lits, {Cmp::gt}, 0);
            bool single_ge = lits->size() == 1 && (*lits)[0].first == Cmp::ge;
            if (all_gt || single_ge) {
                ok = true;
                head_vars.push_back(h);
                for (const auto& [c, v] : *lits) head_vars.push_back(v);
            }
        }
        if (!ok) return false;
    }
    std::vector<int> used = head_vars;
    for (const auto& l : neq) {
        if (l.lhs == l.rhs) return false;
        for (int v : {l.lhs, l.rhs}) {
            if (std::find(used.begin(), used.end(), v) != used.end()) return false;
            used.push_back(v);
        }
    }
    return true;
}

} // namespace

bool recognize_form(const OrderCNF& formula, Form form) {
    int n = formula.arity();
    switch (form) {
        case Form::pp: {
            for (const auto& c : formula.clauses) {
                if (!matches_headed(c, n, {Cmp::ne, Cmp::ge}, static_cast<int>(c.literals.size()))) {
                    return false;
                }
            }
            return true;
        }
        case Form::min: {
            for (const auto& c : formula.clauses) {
                if (!matches_headed(c, n, {Cmp::gt, Cmp::ge}, static_cast<int>(c.literals.size()))) {
                    return false;
                }
            }
            return true;
        }
        case Form::mi: {
            for (const auto& c : formula.clauses) {
                if (!matches_headed(c, n, {Cmp::ne, Cmp::gt, Cmp::ge}, 1)) return false;
            }
            return true;
        }
        case Form::ll: {
            for (const auto& c : formula.clauses) {
                if (!matches_ll_clause(c, n)) return false;
            }
            return true;
        }
        case Form::mix: {
            // units, plus a matching into phi-mix pairs
            std::vector<size_t> pending;
            for (size_t i = 0; i < formula.clauses.size(); ++i) {
                if (!matches_headed(formula.clauses[i], n, {Cmp::ne, Cmp::gt},
                                    static_cast<int>(formula.clauses[i].literals.size()))) {
                    pending.push_back(i);
                }
            }
            std::vector<bool> paired(formula.clauses.size(), false);
            for (size_t i : pending) {
                if (paired[i]) continue;
                auto half = mix_pair_half(formula.clauses[i], n);
                if (!half) return false;
                bool found = false;
                for (size_t j : pending) {
                    if (j == i || paired[j]) continue;
                    auto other = mix_pair_half(formula.clauses[j], n);
                    if (other && halves_pair_up(*half, *other)) {
                        paired[i] = paired[j] = true;
                        found = true;
                        break;
                    }
                }
                if (!found) return false;
            }
            return true;
        }
    }
    return false;
}

namespace {

// A synthesis unit: either one headed clause or a phi-mix clause pair.
struct Unit {
    // clause 1: head, literals (cmp, var); clause 2 only for pairs
    std::vector<std::pair<int, std::vector<std::pair<Cmp, int>>>> clauses;

    bool sat_clause(size_t ci, const WeakOrder& w) const {
        const auto& [h, lits] = clauses[ci];
        for (const auto& [c, v] : lits) {
            if (cmp_holds(c, w.rank(h), w.rank(v))) return true;
        }
        return false;
    }
    bool satisfied_by(const WeakOrder& w) const {
        for (size_t ci = 0; ci < clauses.size(); ++ci) {
            if (!sat_clause(ci, w)) return false;
        }
        return true;
    }
    bool entailed_by(const TemporalRelation& r) const {
        for (const auto& w : r.orbits()) {
            if (!satisfied_by(w)) return false;
        }
        return true;
    }
};

TemporalRelation units_relation(const std::vector<Unit>& units, int arity) {
    std::vector<WeakOrder> orbits;
    for (const auto& w : enumerate_weak_orders(arity)) {
        bool ok = true;
        for (const auto& u : units) {
            if (!u.satisfied_by(w)) {
                ok = false;
                break;
            }
        }
        if (ok) orbits.push_back(w);
    }
    return TemporalRelation(arity, std::move(orbits));
}

// Headed candidate clauses over distinct variables: every assignment of the
// allowed connectives (or absence) to the non-head variables.
std::vector<Unit> headed_candidates(int n, const std::vector<Cmp>& conns, int max_ge) {
    std::vector<Unit> out;
    for (int h = 0; h < n; ++h) {
        std::vector<int> others;
        for (int v = 0; v < n; ++v) {
            if (v != h) others.push_back(v);
        }
        int m = static_cast<int>(others.size());
        int options = static_cast<int>(conns.size()) + 1;
        std::vector<int> pick(static_cast<size_t>(m), 0);
        while (true) {
            std::vector<std::pair<Cmp, int>> lits;
            int ge = 0;
            for (int i = 0; i < m; ++i) {
                int p = pick[static_cast<size_t>(i)];
                if (p > 0) {
                    Cmp c = conns[static_cast<size_t>(p - 1)];
                    lits.push_back({c, others[static_cast<size_t>(i)]});
                    if (c == Cmp::ge) ++ge;
                }
            }
            if (!lits.empty() && ge <= max_ge) {
                Unit u;
                u.clauses.push_back({h, std::move(lits)});
                out.push_back(std::move(u));
            }
            int i = m - 1;
            while (i >= 0 && pick[static_cast<size_t>(i)] == options - 1) {
                pick[static_cast<size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++pick[static_cast<size_t>(i)];
        }
    }
    return out;
}

// phi-mix pairs: (x >= y | x > z for z in S) & (y >= x | y > z for z in S),
// S any non-empty subset of variables; repeated variables are allowed and the
// degenerate literals x > x are dropped.
std::vector<Unit> mix_pair_candidates(int n) {
    std::vector<Unit> out;
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            for (int mask = 1; mask < (1 << n); ++mask) {
                Unit u;
                std::vector<std::pair<Cmp, int>> cx = {{Cmp::ge, y}};
                std::vector<std::pair<Cmp, int>> cy = {{Cmp::ge, x}};
                for (int z = 0; z < n; ++z) {
                    if (!(mask & (1 << z))) continue;
                    if (z != x) cx.push_back({Cmp::gt, z});
                    if (z != y) cy.push_back({Cmp::gt, z});
                }
                u.clauses.push_back({x, std::move(cx)});
                u.clauses.push_back({y, std::move(cy)});
                out.push_back(std::move(u));
            }
        }
    }
    return out;
}

OrderCNF units_to_cnf(const std::vector<Unit>& units, int arity) {
    OrderCNF cnf;
    cnf.variables = default_variables(arity);
    for (const auto& u : units) {
        for (const auto& [h, lits] : u.clauses) {
            Clause c;
            for (const auto& [cmp, v] : lits) c.literals.push_back({h, cmp, v});
            cnf.clauses.push_back(std::move(c));
        }
    }
    return cnf;
}

} // namespace

std::optional<OrderCNF> synthesize_form(const TemporalRelation& r, Form form) {
    if (r.arity() > Config::global().max_arity) {
        throw CapExceeded("synthesize_form: relation arity exceeds the configured cap");
    }
    int n = r.arity();
    std::vector<Unit> candidates;
    switch (form) {
        case Form::pp: candidates = headed_candidates(n, {Cmp::ne, Cmp::ge}, n); break;
        case Form::min: candidates = headed_candidates(n, {Cmp::gt, Cmp::ge}, n); break;
        case Form::mi: candidates = headed_candidates(n, {Cmp::ne, Cmp::gt, Cmp::ge}, 1); break;
        case Form::mix: {
            candidates = headed_candidates(n, {Cmp::ne, Cmp::gt}, 0);
            auto pairs = mix_pair_candidates(n);
            candidates.insert(candidates.end(), pairs.begin(), pairs.end());
            break;
        }
        case Form::ll:
            throw ContractError("synthesize_form: ll-form synthesis is not provided");
    }

    std::vector<Unit> kept;
    for (const auto& u : candidates) {
        if (u.entailed_by(r)) kept.push_back(u);
    }
    if (!units_relation(kept, n).same_orbits(r)) {
        return std::nullopt;
    }

    // Reduce: drop whole units, then literals, in enumeration order. The ">="
    // head literal of a pair is fixed; a pair's z-literals are dropped from
    // both halves together.
    for (size_t i = 0; i < kept.size();) {
        std::vector<Unit> trial = kept;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (units_relation(trial, n).same_orbits(r)) {
            kept = std::move(trial);
        } else {
            ++i;
        }
    }
    auto try_replace = [&](size_t ui, const Unit& replacement) {
        std::vector<Unit> all = kept;
        all[ui] = replacement;
        if (units_relation(all, n).same_orbits(r)) {
            kept[ui] = replacement;
            return true;
        }
        return false;
    };
    for (size_t ui = 0; ui < kept.size(); ++ui) {
        if (kept[ui].clauses.size() == 2) {
            // collect the pair's z set from both halves
            std::vector<int> zs;
            for (size_t ci = 0; ci < 2; ++ci) {
                const auto& lits = kept[ui].clauses[ci].second;
                for (size_t k = 1; k < lits.size(); ++k) {
                    if (std::find(zs.begin(), zs.end(), lits[k].second) == zs.end()) {
                        zs.push_back(lits[k].second);
                    }
                }
            }
            for (int z : zs) {
                Unit trial = kept[ui];
                bool still_pair = true;
                for (auto& [h, lits] : trial.clauses) {
                    lits.erase(std::remove_if(lits.begin() + 1, lits.end(),
                                              [&](const auto& l) { return l.second == z; }),
                               lits.end());
                    still_pair = still_pair && lits.size() >= 1;
                }
                // keep the phi-mix shape: at least one strict literal somewhere
                bool has_strict = trial.clauses[0].second.size() > 1 || trial.clauses[1].second.size() > 1;
                if (still_pair && has_strict) try_replace(ui, trial);
            }
        } else {
            for (size_t li = 0; li < kept[ui].clauses[0].second.size() && kept[ui].clauses[0].second.size() > 1;) {
                Unit trial = kept[ui];
                trial.clauses[0].second.erase(trial.clauses[0].second.begin() + static_cast<long>(li));
                if (!try_replace(ui, trial)) ++li;
            }
        }
    }

    auto cnf = units_to_cnf(kept, n);
    return cnf;
}

} // namespace tcsp
