#include "tcsp/nelson_oppen.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "tcsp/builtins.hpp"
#include "tcsp/error.hpp"
#include "tcsp/preserve.hpp"

namespace tcsp {

bool EpDefinition::validate(const TemporalStructure& a, std::string* why) const {
    if (disjuncts.empty()) {
        if (why) *why = "ep-definition has no disjuncts";
        return false;
    }
    std::set<uint64_t> covered;
    for (const auto& d : disjuncts) {
        if (d.num_free != 2) {
            if (why) *why = "ep-disjunct is not binary";
            return false;
        }
        auto rel = eval_pp(d, a);
        for (const auto& w : rel.orbits()) {
            if (w == WeakOrder({0, 0})) {
                if (why) *why = "ep-disjunct admits an equal pair";
                return false;
            }
            covered.insert(w.key());
        }
    }
    if (covered.size() != 2) {
        if (why) *why = "ep-disjuncts do not cover the disequality relation";
        return false;
    }
    return true;
}

namespace {

std::optional<std::string> find_with_orbits(const TemporalStructure& a, const TemporalRelation& target) {
    for (const auto& rel : a.relations()) {
        if (rel.same_orbits(target)) return rel.name();
    }
    return std::nullopt;
}

PPFormula binary_atom(const std::string& rel, int lhs, int rhs) {
    PPFormula f;
    f.num_free = 2;
    f.vars = {"x", "y"};
    f.atoms.push_back({rel, {lhs, rhs}});
    return f;
}

} // namespace

EpDefinition ep_from_less(const TemporalStructure& a) {
    auto lt = find_with_orbits(a, builtin("Lt"));
    if (!lt) throw LookupError("ep_from_less: structure has no strict-order relation");
    EpDefinition ep;
    ep.disjuncts.push_back(binary_atom(*lt, 0, 1));
    ep.disjuncts.push_back(binary_atom(*lt, 1, 0));
    return ep;
}

std::optional<EpDefinition> derive_ep_definition(const TemporalStructure& a) {
    if (auto ne = find_with_orbits(a, builtin("Neq"))) {
        EpDefinition ep;
        ep.disjuncts.push_back(binary_atom(*ne, 0, 1));
        return ep;
    }
    if (find_with_orbits(a, builtin("Lt"))) {
        return ep_from_less(a);
    }
    return std::nullopt;
}

namespace {

struct Combiner {
    const CombinedInstance& input;
    const SideSolver* solvers[2];
    const EpDefinition* eps[2];
    CombineTrace trace;
    std::vector<int> parent;
    std::vector<std::vector<AtomicConstraint>> sides{2};

    int find(int v) { return parent[static_cast<size_t>(v)] == v ? v : parent[static_cast<size_t>(v)] = find(parent[static_cast<size_t>(v)]); }

    std::vector<int> active_vars() {
        std::vector<int> out;
        for (int v = 0; v < static_cast<int>(parent.size()); ++v) {
            if (find(v) == v) out.push_back(v);
        }
        return out;
    }

    // The side's constraint set over representatives, with an optional
    // ep-disjunct applied to a variable pair, as a standalone instance.
    Instance side_instance(int side, const PPFormula* disjunct, int vk, int vl) {
        const auto& structure = side == 0 ? input.structure1 : input.structure2;
        auto reps = active_vars();
        std::vector<std::string> names;
        std::vector<int> pos(parent.size(), -1);
        for (int r : reps) {
            pos[static_cast<size_t>(r)] = static_cast<int>(names.size());
            names.push_back(input.variables[static_cast<size_t>(r)]);
        }
        Instance inst(structure, names);
        for (const auto& c : sides[static_cast<size_t>(side)]) {
            std::vector<int> vars;
            vars.reserve(c.vars.size());
            for (int v : c.vars) vars.push_back(pos[static_cast<size_t>(find(v))]);
            inst.add(c.rel, vars);
        }
        if (disjunct) {
            std::vector<int> remap(disjunct->vars.size());
            remap[0] = pos[static_cast<size_t>(find(vk))];
            remap[1] = pos[static_cast<size_t>(find(vl))];
            for (int b = 2; b < static_cast<int>(disjunct->vars.size()); ++b) {
                remap[static_cast<size_t>(b)] =
                    inst.add_variable("_ep" + std::to_string(b - 1));
            }
            for (const auto& atom : disjunct->atoms) {
                std::vector<int> vars;
                for (int v : atom.args) vars.push_back(remap[static_cast<size_t>(v)]);
                inst.add(atom.rel, vars);
            }
        }
        return inst;
    }

    bool pair_must_merge(int side, int vk, int vl) {
        for (size_t di = 0; di < eps[side]->disjuncts.size(); ++di) {
            Instance inst = side_instance(side, &eps[side]->disjuncts[di], vk, vl);
            ++trace.solver_calls;
            bool sat = (*solvers[side])(inst).sat;
            trace.disjunct_outcomes.push_back(
                "side" + std::to_string(side + 1) + " (" + input.variables[static_cast<size_t>(vk)] +
                "," + input.variables[static_cast<size_t>(vl)] + ") disjunct " + std::to_string(di) +
                (sat ? ": sat" : ": unsat"));
            if (sat) return false;
        }
        return true;
    }

    CombineResult run() {
        int n = static_cast<int>(input.variables.size());
        parent.resize(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) parent[static_cast<size_t>(v)] = v;
        sides[0] = input.side1;
        sides[1] = input.side2;
        // pad: all variables occur in both sides
        for (int side = 0; side < 2; ++side) {
            std::vector<bool> seen(static_cast<size_t>(n), false);
            for (const auto& c : sides[static_cast<size_t>(side)]) {
                for (int v : c.vars) seen[static_cast<size_t>(v)] = true;
            }
            for (int v = 0; v < n; ++v) {
                if (!seen[static_cast<size_t>(v)]) {
                    sides[static_cast<size_t>(side)].push_back({"=", {v, v}});
                }
            }
        }

        size_t merge_count = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            ++trace.rounds;
            for (int side = 0; side < 2; ++side) {
                auto reps = active_vars();
                for (size_t i = 0; i < reps.size(); ++i) {
                    for (size_t j = i + 1; j < reps.size(); ++j) {
                        int vk = reps[i], vl = reps[j];
                        if (find(vk) != vk || find(vl) != vl) continue; // merged this pass
                        if (pair_must_merge(side, vk, vl)) {
                            parent[static_cast<size_t>(vl)] = vk;
                            trace.merges.push_back({input.variables[static_cast<size_t>(vk)],
                                                    input.variables[static_cast<size_t>(vl)],
                                                    side + 1, trace.rounds});
                            if (++merge_count > static_cast<size_t>(n)) {
                                throw Error("combine: merge count exceeded the variable count");
                            }
                            changed = true;
                        }
                    }
                }
            }
        }
        ++trace.solver_calls;
        bool sat1 = (*solvers[0])(side_instance(0, nullptr, 0, 0)).sat;
        ++trace.solver_calls;
        bool sat2 = sat1 && (*solvers[1])(side_instance(1, nullptr, 0, 0)).sat;
        return {sat1 && sat2, std::move(trace)};
    }
};

} // namespace

CombineResult combine_nelson_oppen(const CombinedInstance& instance, const SideSolver& solver1,
                                   const SideSolver& solver2, const EpDefinition& ep1,
                                   const EpDefinition& ep2) {
    std::string why;
    if (!ep1.validate(*instance.structure1, &why)) {
        throw ContractError("combine: side-1 ep-definition rejected: " + why);
    }
    if (!ep2.validate(*instance.structure2, &why)) {
        throw ContractError("combine: side-2 ep-definition rejected: " + why);
    }
    if (instance.variables.empty()) {
        throw ContractError("combine: instance has no variables");
    }
    Combiner c{instance, {&solver1, &solver2}, {&ep1, &ep2}};
    return c.run();
}

CombineResult combine_nelson_oppen(const CombinedInstance& instance, const EpDefinition& ep1,
                                   const EpDefinition& ep2) {
    SideSolver oracle = [](const Instance& i) { return solve_oracle(i); };
    return combine_nelson_oppen(instance, oracle, oracle, ep1, ep2);
}

IndependenceResult independence_falsifier(std::shared_ptr<const TemporalStructure> a, uint64_t seed,
                                          int trials, int max_vars) {
    IndependenceResult result;
    if (preserves(OpSpec::parse("ll"), *a).preserved || preserves(OpSpec::parse("dll"), *a).preserved) {
        result.status = IndependenceStatus::certified_independent;
        return result;
    }
    if (a->relations().empty()) {
        result.status = IndependenceStatus::certified_independent;
        return result;
    }
    max_vars = std::min(max_vars, Config::global().max_oracle_vars);
    std::mt19937_64 rng(seed);
    auto rand_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
    };

    for (int trial = 0; trial < trials; ++trial) {
        result.trials_run = trial + 1;
        int nvars = rand_int(3, max_vars);
        int natoms = rand_int(nvars, 3 * nvars);
        std::vector<std::string> names;
        for (int v = 0; v < nvars; ++v) names.push_back("v" + std::to_string(v));
        Instance inst(a, names);
        for (int k = 0; k < natoms; ++k) {
            const auto& rel = a->relations()[static_cast<size_t>(rand_int(
                0, static_cast<int>(a->relations().size()) - 1))];
            std::vector<int> tuple;
            for (int i = 0; i < rel.arity(); ++i) tuple.push_back(rand_int(0, nvars - 1));
            inst.add(rel.name(), tuple);
        }
        // shrink to the satisfiable boundary: tight instances force equalities
        while (!inst.constraints().empty() && !solve_oracle(inst).sat) {
            Instance shrunk(a, names);
            size_t drop = static_cast<size_t>(rand_int(0, static_cast<int>(inst.constraints().size()) - 1));
            for (size_t ci = 0; ci < inst.constraints().size(); ++ci) {
                if (ci != drop) shrunk.add(inst.constraints()[ci].rel, inst.constraints()[ci].vars);
            }
            inst = std::move(shrunk);
        }
        if (inst.constraints().empty()) continue;

        std::vector<std::pair<int, int>> sat_pairs;
        for (int i = 0; i < nvars; ++i) {
            for (int j = i + 1; j < nvars; ++j) {
                Instance with(inst);
                with.add("!=", {i, j});
                if (solve_oracle(with).sat) sat_pairs.push_back({i, j});
            }
        }
        if (sat_pairs.size() < 2) continue;
        Instance joint(inst);
        for (auto [i, j] : sat_pairs) joint.add("!=", {i, j});
        if (!solve_oracle(joint).sat) {
            IndependenceCounterexample ce{inst, {}};
            for (auto [i, j] : sat_pairs) {
                ce.pairs.push_back({names[static_cast<size_t>(i)], names[static_cast<size_t>(j)]});
            }
            result.status = IndependenceStatus::violated;
            result.counterexample = std::move(ce);
            return result;
        }
    }
    result.status = IndependenceStatus::none_found;
    return result;
}

} // namespace tcsp
