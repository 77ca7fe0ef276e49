#include "tcsp/rmix.hpp"

#include <algorithm>

#include "tcsp/builtins.hpp"
#include "tcsp/error.hpp"
#include "tcsp/forms.hpp"
#include "tcsp/preserve.hpp"

namespace tcsp {

TemporalRelation rmix_n(int n) {
    if (n < 3) throw ContractError("rmix_n: arity must be >= 3");
    return builtin("Rmix" + std::to_string(n));
}

PPFormula rmix_n_inductive(int n) {
    if (n < 3) throw ContractError("rmix_n_inductive: arity must be >= 3");
    PPFormula f;
    f.num_free = n;
    f.vars = default_variables(n);
    int fresh = 0;
    // unfold: coords is the argument list of the current rmix_k atom
    auto unfold = [&](auto&& self, std::vector<int> coords) -> void {
        int k = static_cast<int>(coords.size());
        if (k == 3) {
            f.atoms.push_back({"Rmix", coords});
            return;
        }
        int h = static_cast<int>(f.vars.size());
        f.vars.push_back("h" + std::to_string(++fresh));
        std::vector<int> inner(coords.begin(), coords.end() - 1);
        inner[1] = h;
        self(self, std::move(inner));
        f.atoms.push_back({"Rmix", {h, coords[1], coords[k - 1]}});
    };
    unfold(unfold, [&] {
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
        return all;
    }());
    return f;
}

namespace {

struct Extractor {
    TemporalStructure env;          // input structure extended by emitted steps
    PpdefSearchOptions search;
    std::vector<DefinitionStep> steps;
    std::vector<std::string> assumed;

    void add_step(const std::string& name, PPFormula formula, const TemporalRelation& expected) {
        auto got = eval_pp(formula, env);
        if (!got.same_orbits(expected)) {
            throw Error("rmix extraction: step '" + name + "' does not evaluate to its target");
        }
        env.add(name, expected);
        steps.push_back({name, std::move(formula)});
    }

    // Like add_step but only signals failure, for enumerate-and-validate.
    bool try_step(const std::string& name, PPFormula formula, const TemporalRelation& expected) {
        if (!eval_pp(formula, env).same_orbits(expected)) return false;
        env.add(name, expected);
        steps.push_back({name, std::move(formula)});
        return true;
    }

    std::string fresh_name(const std::string& preferred) const {
        std::string name = preferred;
        int i = 1;
        while (env.find(name)) name = preferred + "_" + std::to_string(i++);
        return name;
    }

    // Name of a relation of env with the target's orbit set; found by a
    // bounded definability search otherwise; assumed (and flagged) if the
    // search comes back empty.
    std::string resolve_or_assume(const TemporalRelation& target, const std::string& preferred) {
        for (const auto& rel : env.relations()) {
            if (rel.same_orbits(target)) return rel.name();
        }
        std::string name = fresh_name(preferred);
        if (auto found = bounded_ppdef_search(env, target, search)) {
            add_step(name, std::move(*found), target);
        } else {
            assumed.push_back(name);
            env.add(name, target);
        }
        return name;
    }

    // ---- routes ----------------------------------------------------------

    const TemporalRelation* first_non_ll() const {
        for (const auto& rel : env.relations()) {
            if (!preserves(OpSpec::parse("ll"), rel).preserved) return &rel;
        }
        return nullptr;
    }

    // oriented literals of a synthesized clause: (head, [(cmp, var)])
    static std::pair<int, std::vector<std::pair<Cmp, int>>> split(const Clause& c) {
        std::pair<int, std::vector<std::pair<Cmp, int>>> out;
        out.first = c.literals.front().lhs;
        for (const auto& l : c.literals) out.second.push_back({l.cmp, l.rhs});
        return out;
    }

    bool route_mix() {
        const auto* r = first_non_ll();
        if (!r) throw Error("rmix extraction: no ll-violating relation found");
        auto cnf = synthesize_form(*r, Form::mix);
        if (!cnf) throw Error("rmix extraction: mix-form synthesis failed unexpectedly");
        std::string lt = resolve_or_assume(builtin("Lt"), "Lt");
        // find a phi-mix clause pair (x >= y | x > z..) & (y >= x | y > z..)
        for (size_t i = 0; i < cnf->clauses.size(); ++i) {
            auto [xh, xl] = split(cnf->clauses[i]);
            std::vector<int> zs;
            int ge_to = -1;
            for (auto& [cmp, v] : xl) {
                if (cmp == Cmp::ge) ge_to = v;
                else if (cmp == Cmp::gt) zs.push_back(v);
                else { ge_to = -2; break; }
            }
            if (ge_to < 0 || zs.empty()) continue;
            for (size_t j = 0; j < cnf->clauses.size(); ++j) {
                if (j == i) continue;
                auto [yh, yl] = split(cnf->clauses[j]);
                if (yh != ge_to) continue;
                std::vector<int> zs2;
                bool ok = true;
                for (auto& [cmp, v] : yl) {
                    if (cmp == Cmp::ge) ok = ok && v == xh;
                    else if (cmp == Cmp::gt) zs2.push_back(v);
                    else ok = false;
                }
                std::sort(zs2.begin(), zs2.end());
                auto zs1 = zs;
                std::sort(zs1.begin(), zs1.end());
                if (!ok || zs1 != zs2) continue;
                if (build_mix_formula(*r, xh, yh, zs1, lt)) return true;
                // try the pair in the other orientation as well
                if (build_mix_formula(*r, yh, xh, zs1, lt)) return true;
            }
        }
        throw Error("rmix extraction: no usable phi-mix clause pair");
    }

    bool build_mix_formula(const TemporalRelation& r, int xc, int yc, const std::vector<int>& zs,
                           const std::string& lt) {
        PPFormula f;
        f.num_free = 3;
        f.vars = {"x", "y", "z"};
        std::vector<int> arg(static_cast<size_t>(r.arity()), -1);
        arg[static_cast<size_t>(xc)] = 0;
        arg[static_cast<size_t>(yc)] = 1;
        for (int c = 0; c < r.arity(); ++c) {
            if (arg[static_cast<size_t>(c)] < 0) {
                arg[static_cast<size_t>(c)] = static_cast<int>(f.vars.size());
                f.vars.push_back("b" + std::to_string(c + 1));
            }
        }
        f.atoms.push_back({r.name(), arg});
        for (size_t k = 1; k < zs.size(); ++k) {
            int zb = arg[static_cast<size_t>(zs[k])];
            f.atoms.push_back({lt, {0, zb}});
            f.atoms.push_back({lt, {1, zb}});
        }
        f.atoms.push_back({lt, {2, arg[static_cast<size_t>(zs[0])]}});
        return try_step(fresh_name("Rmix"), std::move(f), builtin("Rmix"));
    }

    bool conjoin_rmi_pair(const std::string& rmi_name) {
        PPFormula f;
        f.num_free = 3;
        f.vars = {"x", "y", "z"};
        f.atoms.push_back({rmi_name, {0, 1, 2}});
        f.atoms.push_back({rmi_name, {1, 0, 2}});
        return try_step(fresh_name("Rmix"), std::move(f), builtin("Rmix"));
    }

    bool route_mi() {
        for (const auto& rel : env.relations()) {
            if (rel.same_orbits(builtin("Rmi"))) return conjoin_rmi_pair(rel.name());
        }
        const auto* r = first_non_ll();
        if (!r) throw Error("rmix extraction: no ll-violating relation found");
        auto cnf = synthesize_form(*r, Form::mi);
        if (!cnf) throw Error("rmix extraction: mi-form synthesis failed unexpectedly");
        std::string leq = resolve_or_assume(builtin("Leq"), "Leq");
        for (const auto& clause : cnf->clauses) {
            auto [head, lits] = split(clause);
            int ge_to = -1;
            std::vector<int> gts, nes;
            bool shaped = true;
            for (auto& [cmp, v] : lits) {
                if (cmp == Cmp::ge) {
                    if (ge_to >= 0) shaped = false;
                    ge_to = v;
                } else if (cmp == Cmp::gt) {
                    gts.push_back(v);
                } else if (cmp == Cmp::ne) {
                    nes.push_back(v);
                } else {
                    shaped = false;
                }
            }
            if (!shaped || ge_to < 0 || gts.empty()) continue;
            for (size_t pick = 0; pick < gts.size(); ++pick) {
                auto rmi_name = build_mi_psi(*r, head, ge_to, gts, pick, nes, leq);
                if (rmi_name) return conjoin_rmi_pair(*rmi_name);
            }
        }
        throw Error("rmix extraction: no usable mi clause");
    }

    // psi(x,y',z) = exists all other coords:
    //   y' <= y, z <= y_pick, R(...), x <= y_i (other strict targets), x = z_j
    std::optional<std::string> build_mi_psi(const TemporalRelation& r, int head, int ge_to,
                                            const std::vector<int>& gts, size_t pick,
                                            const std::vector<int>& nes, const std::string& leq) {
        PPFormula f;
        f.num_free = 3;
        f.vars = {"x", "yp", "z"};
        std::vector<int> arg(static_cast<size_t>(r.arity()), -1);
        arg[static_cast<size_t>(head)] = 0;
        for (int c = 0; c < r.arity(); ++c) {
            if (arg[static_cast<size_t>(c)] < 0) {
                arg[static_cast<size_t>(c)] = static_cast<int>(f.vars.size());
                f.vars.push_back("b" + std::to_string(c + 1));
            }
        }
        f.atoms.push_back({leq, {1, arg[static_cast<size_t>(ge_to)]}});
        f.atoms.push_back({leq, {2, arg[static_cast<size_t>(gts[pick])]}});
        f.atoms.push_back({r.name(), arg});
        for (size_t k = 0; k < gts.size(); ++k) {
            if (k == pick) continue;
            f.atoms.push_back({leq, {0, arg[static_cast<size_t>(gts[k])]}});
        }
        for (int z : nes) {
            f.atoms.push_back({"=", {0, arg[static_cast<size_t>(z)]}});
        }
        std::string name = fresh_name("Rmi");
        if (!try_step(name, std::move(f), builtin("Rmi"))) return std::nullopt;
        return name;
    }

    bool route_min() {
        const TemporalRelation* r = nullptr;
        for (const auto& rel : env.relations()) {
            if (!preserves(OpSpec::parse("mi"), rel).preserved) {
                r = &rel;
                break;
            }
        }
        if (!r) throw Error("rmix extraction: no mi-violating relation found");
        auto cnf = synthesize_form(*r, Form::min);
        if (!cnf) throw Error("rmix extraction: min-form synthesis failed unexpectedly");
        std::string leq = resolve_or_assume(builtin("Leq"), "Leq");
        std::string lt = resolve_or_assume(builtin("Lt"), "Lt");
        for (const auto& clause : cnf->clauses) {
            auto [head, lits] = split(clause);
            std::vector<int> ges, gts;
            for (auto& [cmp, v] : lits) (cmp == Cmp::ge ? ges : gts).push_back(v);
            if (ges.size() < 2) continue;
            for (size_t a = 0; a < ges.size(); ++a) {
                for (size_t b = 0; b < ges.size(); ++b) {
                    if (a == b) continue;
                    auto name = build_min_phi(*r, head, ges, a, b, gts, leq, lt);
                    if (name) return finish_from_rminleq(*name, lt);
                }
            }
        }
        throw Error("rmix extraction: no usable min clause with two weak literals");
    }

    // phi(x,u,v) = exists all other coords:
    //   R(...), y_a >= u, y_b >= v, x <= x_i, x < y_i (other weak targets)
    std::optional<std::string> build_min_phi(const TemporalRelation& r, int head,
                                             const std::vector<int>& ges, size_t a, size_t b,
                                             const std::vector<int>& gts, const std::string& leq,
                                             const std::string& lt) {
        PPFormula f;
        f.num_free = 3;
        f.vars = {"x", "u", "v"};
        std::vector<int> arg(static_cast<size_t>(r.arity()), -1);
        arg[static_cast<size_t>(head)] = 0;
        for (int c = 0; c < r.arity(); ++c) {
            if (arg[static_cast<size_t>(c)] < 0) {
                arg[static_cast<size_t>(c)] = static_cast<int>(f.vars.size());
                f.vars.push_back("b" + std::to_string(c + 1));
            }
        }
        f.atoms.push_back({r.name(), arg});
        f.atoms.push_back({leq, {1, arg[static_cast<size_t>(ges[a])]}});
        f.atoms.push_back({leq, {2, arg[static_cast<size_t>(ges[b])]}});
        for (int xi : gts) f.atoms.push_back({leq, {0, arg[static_cast<size_t>(xi)]}});
        for (size_t k = 0; k < ges.size(); ++k) {
            if (k == a || k == b) continue;
            f.atoms.push_back({lt, {0, arg[static_cast<size_t>(ges[k])]}});
        }
        std::string name = fresh_name("RminLeq");
        if (!try_step(name, std::move(f), builtin("RminLeq"))) return std::nullopt;
        return name;
    }

    bool finish_from_rminleq(const std::string& rminleq, const std::string& lt) {
        PPFormula rmi;
        rmi.num_free = 3;
        rmi.vars = {"x", "y", "z", "h"};
        rmi.atoms.push_back({rminleq, {0, 3, 1}});
        rmi.atoms.push_back({lt, {2, 3}});
        std::string name = fresh_name("Rmi");
        if (!try_step(name, std::move(rmi), builtin("Rmi"))) {
            throw Error("rmix extraction: Rmi stage failed from RminLeq");
        }
        return conjoin_rmi_pair(name);
    }

    bool route_mx() {
        std::string x = resolve_or_assume(builtin("X"), "X");
        PPFormula f;
        f.num_free = 3;
        f.vars = {"x", "y", "z", "h"};
        f.atoms.push_back({x, {2, 2, 3}});
        f.atoms.push_back({x, {0, 1, 3}});
        return try_step(fresh_name("Rmix"), std::move(f), builtin("Rmix"));
    }

    bool route_t3() {
        std::string t3 = resolve_or_assume(builtin("T3"), "T3");
        std::string leq;
        for (const auto& rel : env.relations()) {
            if (rel.same_orbits(builtin("Leq"))) leq = rel.name();
        }
        if (leq.empty()) {
            leq = fresh_name("Leq");
            PPFormula f;
            f.num_free = 2;
            f.vars = {"x", "y", "w"};
            f.atoms.push_back({t3, {0, 1, 2}});
            add_step(leq, std::move(f), builtin("Leq"));
        }
        std::string lt;
        for (const auto& rel : env.relations()) {
            if (rel.same_orbits(builtin("Lt"))) lt = rel.name();
        }
        if (lt.empty()) {
            std::string neq = fresh_name("Neq");
            {
                PPFormula f;
                f.num_free = 2;
                f.vars = {"x", "y", "w"};
                f.atoms.push_back({t3, {2, 0, 1}});
                add_step(neq, std::move(f), builtin("Neq"));
            }
            lt = fresh_name("Lt");
            PPFormula f;
            f.num_free = 2;
            f.vars = {"x", "y"};
            f.atoms.push_back({leq, {0, 1}});
            f.atoms.push_back({neq, {0, 1}});
            add_step(lt, std::move(f), builtin("Lt"));
        }
        std::string rminleq = fresh_name("RminLeq");
        {
            PPFormula f;
            f.num_free = 3;
            f.vars = {"x", "y", "z", "xp", "yp", "zp"};
            f.atoms.push_back({t3, {3, 4, 5}});
            f.atoms.push_back({leq, {3, 0}});
            f.atoms.push_back({leq, {1, 4}});
            f.atoms.push_back({leq, {2, 5}});
            add_step(rminleq, std::move(f), builtin("RminLeq"));
        }
        return finish_from_rminleq(rminleq, lt);
    }
};

} // namespace

ExtractOutcome extract_rmix_definition(const TemporalStructure& a, const PpdefSearchOptions& search) {
    for (const auto& rel : a.relations()) {
        if (!synthesize_form(rel, Form::pp)) {
            return {std::nullopt, "relation '" + rel.name() + "' is not preserved by pp"};
        }
    }
    if (preserves(OpSpec::parse("ll"), a).preserved) {
        return {std::nullopt, "structure is preserved by ll"};
    }

    Extractor ex{a, search, {}, {}};
    std::string route;
    bool done = false;
    if (preserves(OpSpec::parse("mix"), a).preserved) {
        route = "mix";
        done = ex.route_mix();
    } else if (preserves(OpSpec::parse("mi"), a).preserved) {
        route = "mi";
        done = ex.route_mi();
    } else if (preserves(OpSpec::parse("min"), a).preserved) {
        route = "min";
        done = ex.route_min();
    } else if (preserves(OpSpec::parse("mx"), a).preserved) {
        route = "mx";
        done = ex.route_mx();
    } else {
        route = "t3";
        done = ex.route_t3();
    }
    if (!done) {
        throw Error("rmix extraction: route '" + route + "' did not produce a validated definition");
    }
    RmixExtraction out;
    out.route = route;
    out.steps = std::move(ex.steps);
    out.assumed = std::move(ex.assumed);
    return {std::move(out), ""};
}

} // namespace tcsp
