#include "tcsp/pp_formula.hpp"

#include <algorithm>
#include <set>

#include "tcsp/builtins.hpp"
#include "tcsp/config.hpp"
#include "tcsp/error.hpp"

namespace tcsp {

std::string PPFormula::to_string() const {
    std::string body;
    if (atoms.empty()) body = "true";
    for (size_t i = 0; i < atoms.size(); ++i) {
        if (i) body += " ∧ ";
        const auto& a = atoms[i];
        if (a.rel == "=" && a.args.size() == 2) {
            body += vars[static_cast<size_t>(a.args[0])] + " = " + vars[static_cast<size_t>(a.args[1])];
            continue;
        }
        body += a.rel + "(";
        for (size_t j = 0; j < a.args.size(); ++j) {
            if (j) body += ",";
            body += vars[static_cast<size_t>(a.args[j])];
        }
        body += ")";
    }
    if (num_bound() == 0) return body;
    std::string head = "∃";
    for (int v = num_free; v < static_cast<int>(vars.size()); ++v) {
        if (v > num_free) head += ",";
        head += vars[static_cast<size_t>(v)];
    }
    return head + " (" + body + ")";
}

void PPFormula::inline_formula(const PPFormula& other, const std::vector<int>& args) {
    if (static_cast<int>(args.size()) != other.num_free) {
        throw ContractError("inline_formula: argument count mismatch");
    }
    std::vector<int> remap(other.vars.size());
    for (int i = 0; i < other.num_free; ++i) remap[static_cast<size_t>(i)] = args[static_cast<size_t>(i)];
    for (int i = other.num_free; i < static_cast<int>(other.vars.size()); ++i) {
        remap[static_cast<size_t>(i)] = static_cast<int>(vars.size());
        std::string base = other.vars[static_cast<size_t>(i)];
        std::string fresh = base;
        int suffix = 1;
        auto taken = [&](const std::string& n) {
            return std::find(vars.begin(), vars.end(), n) != vars.end();
        };
        while (taken(fresh)) fresh = base + "_" + std::to_string(suffix++);
        vars.push_back(fresh);
    }
    for (const auto& atom : other.atoms) {
        PPAtom copy = atom;
        for (auto& v : copy.args) v = remap[static_cast<size_t>(v)];
        atoms.push_back(std::move(copy));
    }
}

namespace {

struct ResolvedAtom {
    const TemporalRelation* rel;
    std::vector<int> args;
};

struct Evaluator {
    std::vector<ResolvedAtom> atoms;
    std::vector<int> order;                      // variable placement order
    std::vector<std::vector<int>> checks;        // atoms ready after each placement step
    int num_vars;
    int num_free;
    std::vector<int> rank;                       // current rank per variable (-1 = unplaced)
    std::set<uint64_t> found;

    void run() {
        rank.assign(static_cast<size_t>(num_vars), -1);
        place(0, 0);
    }

    bool atom_holds(const ResolvedAtom& a) const {
        std::vector<int> sub(a.args.size());
        for (size_t i = 0; i < a.args.size(); ++i) sub[i] = rank[static_cast<size_t>(a.args[i])];
        return a.rel->contains(orbit_of(std::span<const int>(sub)));
    }

    void place(int step, int blocks) {
        if (step == num_vars) {
            std::vector<int> free_ranks(static_cast<size_t>(num_free));
            for (int i = 0; i < num_free; ++i) free_ranks[static_cast<size_t>(i)] = rank[static_cast<size_t>(i)];
            found.insert(orbit_of(std::span<const int>(free_ranks)).key());
            return;
        }
        int v = order[static_cast<size_t>(step)];
        for (int pos = 0; pos <= 2 * blocks; ++pos) {
            int b = pos / 2;
            bool join = (pos % 2 == 1);
            if (!join) {
                for (auto& r : rank) {
                    if (r >= b) ++r;
                }
            }
            rank[static_cast<size_t>(v)] = b;
            bool ok = true;
            for (int ai : checks[static_cast<size_t>(step)]) {
                if (!atom_holds(atoms[static_cast<size_t>(ai)])) {
                    ok = false;
                    break;
                }
            }
            if (ok) place(step + 1, join ? blocks : blocks + 1);
            rank[static_cast<size_t>(v)] = -1;
            if (!join) {
                for (auto& r : rank) {
                    if (r > b) --r;
                }
            }
        }
    }
};

} // namespace

TemporalRelation eval_pp(const PPFormula& formula, const TemporalStructure& a) {
    int n = static_cast<int>(formula.vars.size());
    if (formula.num_free < 1 || formula.num_free > n) {
        throw ContractError("eval_pp: malformed free variable count");
    }
    if (n > Config::global().max_eval_vars) {
        throw CapExceeded("eval_pp: formula has more variables than the evaluation cap");
    }

    Evaluator ev;
    ev.num_vars = n;
    ev.num_free = formula.num_free;
    for (const auto& atom : formula.atoms) {
        const TemporalRelation* rel;
        if (atom.rel == "=") {
            rel = &builtin("Eq");
        } else {
            rel = a.find(atom.rel);
            if (!rel) throw LookupError("eval_pp: relation '" + atom.rel + "' is not in the signature");
        }
        if (static_cast<int>(atom.args.size()) != rel->arity()) {
            throw ContractError("eval_pp: atom arity mismatch for '" + atom.rel + "'");
        }
        for (int v : atom.args) {
            if (v < 0 || v >= n) throw ContractError("eval_pp: atom references an unknown variable");
        }
        ev.atoms.push_back({rel, atom.args});
    }

    // Placement order: repeatedly pick the variable completing the most atoms.
    std::vector<bool> placed(static_cast<size_t>(n), false);
    std::vector<bool> atom_done(ev.atoms.size(), false);
    ev.checks.assign(static_cast<size_t>(n), {});
    for (int step = 0; step < n; ++step) {
        int best = -1;
        int best_score = -1;
        for (int v = 0; v < n; ++v) {
            if (placed[static_cast<size_t>(v)]) continue;
            int score = 0;
            for (size_t ai = 0; ai < ev.atoms.size(); ++ai) {
                if (atom_done[ai]) continue;
                bool completes = false;
                bool blocked = false;
                for (int w : ev.atoms[ai].args) {
                    if (w == v) completes = true;
                    else if (!placed[static_cast<size_t>(w)]) blocked = true;
                }
                if (completes && !blocked) ++score;
            }
            if (score > best_score) {
                best_score = score;
                best = v;
            }
        }
        placed[static_cast<size_t>(best)] = true;
        ev.order.push_back(best);
        for (size_t ai = 0; ai < ev.atoms.size(); ++ai) {
            if (atom_done[ai]) continue;
            bool ready = true;
            for (int w : ev.atoms[ai].args) ready = ready && placed[static_cast<size_t>(w)];
            if (ready) {
                atom_done[ai] = true;
                ev.checks[static_cast<size_t>(step)].push_back(static_cast<int>(ai));
            }
        }
    }

    ev.run();
    std::vector<WeakOrder> orbits;
    for (const auto& w : enumerate_weak_orders(formula.num_free)) {
        if (ev.found.count(w.key())) orbits.push_back(w);
    }
    return TemporalRelation(formula.num_free, std::move(orbits));
}

} // namespace tcsp
