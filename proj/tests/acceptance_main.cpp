// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Every tolerance is pinned here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tcsp/builtins.hpp"
#include "tcsp/classify.hpp"
#include "tcsp/cross_prevention.hpp"
#include "tcsp/forms.hpp"
#include "tcsp/gf2.hpp"
#include "tcsp/nelson_oppen.hpp"
#include "tcsp/preserve.hpp"
#include "tcsp/rmix.hpp"
#include "tcsp/solvers.hpp"

using namespace tcsp;

namespace {

int failures = 0;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double elapsed = seconds_since(start);
    if (budget_seconds > 0 && elapsed >= budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    }
    std::printf("%s  %2d. %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, title.c_str(), elapsed,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool pres(const char* op, const TemporalRelation& r) {
    return preserves(OpSpec::parse(op), r).preserved;
}

TemporalStructure st(std::string name, const std::vector<std::string>& names) {
    return TemporalStructure::of_builtins(std::move(name), names);
}

std::shared_ptr<TemporalStructure> stp(std::string name, const std::vector<std::string>& names) {
    return std::make_shared<TemporalStructure>(st(std::move(name), names));
}

// All subsets of the 13 orbits on three points, in mask order.
std::vector<TemporalRelation> all_arity3_relations() {
    auto orbits = enumerate_weak_orders(3);
    std::vector<TemporalRelation> out;
    out.reserve(1 << 13);
    for (int mask = 0; mask < (1 << 13); ++mask) {
        std::vector<WeakOrder> sel;
        for (int b = 0; b < 13; ++b) {
            if (mask & (1 << b)) sel.push_back(orbits[static_cast<size_t>(b)]);
        }
        out.emplace_back(3, std::move(sel));
    }
    return out;
}

// ---------------------------------------------------------------------------

bool c1_enumeration(std::string& detail) {
    const uint64_t expected[] = {1, 3, 13, 75, 541, 4683, 47293, 545835};
    for (int n = 1; n <= 8; ++n) {
        uint64_t got = enumerate_weak_orders(n).size();
        uint64_t oracle = testing_oracles::ordered_bell(n);
        if (got != expected[n - 1] || got != oracle) {
            detail = "n=" + std::to_string(n) + " count " + std::to_string(got);
            return false;
        }
    }
    return true;
}

bool c2_mix_table(std::string& detail) {
    ConcreteMixTable mix;
    const int expected[4][4] = {{2, 1, 1, 1}, {0, 5, 4, 4}, {0, 3, 8, 7}, {0, 3, 6, 11}};
    for (int x = 0; x <= 3; ++x) {
        for (int y = 0; y <= 3; ++y) {
            if (mix(x, y) != expected[x][y]) {
                detail = "mix(" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                         std::to_string(mix(x, y));
                return false;
            }
        }
    }
    return true;
}

bool c3_preservation_battery(std::string& detail) {
    const auto& rmix = builtin("Rmix");
    struct Row {
        const char* op;
        bool expect;
    };
    for (Row row : {Row{"min", true}, Row{"mi", true}, Row{"mx", true}, Row{"mix", true},
                    Row{"lex", false}, Row{"ll", false}}) {
        if (pres(row.op, rmix) != row.expect) {
            detail = std::string(row.op) + " on Rmix";
            return false;
        }
    }
    for (int n : {3, 4, 5}) {
        if (!pres("mix", rmix_n(n))) {
            detail = "mix on Rmix_" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool c4_grid(std::string&) { return mi_from_mix_grid_check(); }

bool c5_normal_form_sweep(std::string& detail) {
    auto relations = all_arity3_relations();
    const std::pair<Form, const char*> forms[] = {
        {Form::pp, "pp"}, {Form::min, "min"}, {Form::mi, "mi"}, {Form::mix, "mix"}};
    long discrepancies = 0;
    for (const auto& r : relations) {
        for (auto [form, op] : forms) {
            bool synth = synthesize_form(r, form).has_value();
            bool preserved = pres(op, r);
            if (synth != preserved) {
                ++discrepancies;
                if (detail.empty()) {
                    detail = std::string(op) + " disagrees on " + r.to_string();
                }
            }
        }
    }
    if (discrepancies) {
        detail += " (" + std::to_string(discrepancies) + " discrepancies)";
        return false;
    }
    return true;
}

bool c6_mx_min_implies_mi(std::string& detail) {
    auto relations = all_arity3_relations();
    for (const auto& r : relations) {
        if (pres("mx", r) && pres("min", r) && !pres("mi", r)) {
            detail = r.to_string();
            return false;
        }
    }
    return true;
}

bool c7_gf2(std::string& detail) {
    auto rmix = chi0_system(builtin("Rmix"));
    if (!rmix) {
        detail = "Rmix reported not-linear";
        return false;
    }
    std::vector<uint32_t> expect = {0b000, 0b011, 0b100, 0b111}; // bit i = x_{i+1}
    if (rmix->enumerate() != expect || rmix->to_string() != "x1 + x2 = 0") {
        detail = "Rmix system: " + rmix->to_string();
        return false;
    }
    auto x = chi0_system(builtin("X"));
    if (!x || x->to_string() != "x1 + x2 + x3 = 0") {
        detail = "X system";
        return false;
    }
    if (chi0_system(builtin("Betw")).has_value() || pres("mx", builtin("Betw"))) {
        detail = "Betw should be non-linear and not mx-preserved";
        return false;
    }
    return true;
}

bool c8_constructive_definitions(std::string& detail) {
    struct Case {
        std::string name;
        std::function<bool()> run;
    };
    auto t3 = st("T", {"T3"});
    auto t3leq = st("T", {"T3", "Leq"});
    auto xs = st("X1", {"X"});
    auto base = st("B", {"Lt", "Rmix"});
    std::vector<Case> cases;
    cases.push_back({"Leq over (Q;T3)", [&] {
                         PPFormula f;
                         f.num_free = 2;
                         f.vars = {"x", "y", "z"};
                         f.atoms.push_back({"T3", {0, 1, 2}});
                         return eval_pp(f, t3).same_orbits(builtin("Leq"));
                     }});
    cases.push_back({"Neq over (Q;T3)", [&] {
                         PPFormula f;
                         f.num_free = 2;
                         f.vars = {"x", "y", "z"};
                         f.atoms.push_back({"T3", {2, 0, 1}});
                         return eval_pp(f, t3).same_orbits(builtin("Neq"));
                     }});
    cases.push_back({"RminLeq over (Q;T3)", [&] {
                         PPFormula f;
                         f.num_free = 3;
                         f.vars = {"x", "y", "z", "xp", "yp", "zp"};
                         f.atoms = {{"T3", {3, 4, 5}}, {"Leq", {3, 0}}, {"Leq", {1, 4}},
                                    {"Leq", {2, 5}}};
                         return eval_pp(f, t3leq).same_orbits(builtin("RminLeq"));
                     }});
    cases.push_back({"Smi over (Q;T3)", [&] {
                         PPFormula f;
                         f.num_free = 3;
                         f.vars = {"x", "y", "z", "u", "v", "w"};
                         f.atoms = {{"T3", {0, 3, 4}}, {"T3", {5, 3, 1}}, {"Leq", {2, 4}}};
                         return eval_pp(f, t3leq).same_orbits(builtin("Smi"));
                     }});
    cases.push_back({"Rmix over (Q;X)", [&] {
                         PPFormula f;
                         f.num_free = 3;
                         f.vars = {"x", "y", "z", "h"};
                         f.atoms = {{"X", {2, 2, 3}}, {"X", {0, 1, 3}}};
                         return eval_pp(f, xs).same_orbits(builtin("Rmix"));
                     }});
    cases.push_back({"Rmix_4 induction", [&] {
                         return eval_pp(rmix_n_inductive(4), base).same_orbits(rmix_n(4));
                     }});
    cases.push_back({"Rmix_5 induction", [&] {
                         return eval_pp(rmix_n_inductive(5), base).same_orbits(rmix_n(5));
                     }});
    for (auto& c : cases) {
        auto start = std::chrono::steady_clock::now();
        bool ok = c.run();
        double elapsed = seconds_since(start);
        if (!ok || elapsed >= 1.0) {
            detail = c.name + (ok ? " too slow" : " mismatch") + " (" + std::to_string(elapsed) + "s)";
            return false;
        }
    }
    return true;
}

bool c9_cross_prevention(std::string& detail) {
    auto lt = st("S", {"Lt"});
    PPFormula strict;
    strict.num_free = 4;
    strict.vars = {"x", "y", "u", "v"};
    strict.atoms = {{"Lt", {2, 0}}, {"Lt", {1, 3}}};
    if (!check_cross_prevention(lt, strict)) {
        detail = "(Q;<) with u<x & y<v";
        return false;
    }
    auto leq = st("S", {"Leq"});
    PPFormula weak;
    weak.num_free = 4;
    weak.vars = {"x", "y", "u", "v"};
    weak.atoms = {{"Leq", {2, 0}}, {"Leq", {1, 3}}};
    if (check_cross_prevention(leq, weak)) {
        detail = "(Q;<=) analogue should fail";
        return false;
    }
    return true;
}

bool c10_solver_equivalences(std::string& detail) {
    // (a) exhaustive pool: all min-form clauses over four variables as
    // arity-4 relations; instances are all subsets of at most three clauses
    auto pool_structure = std::make_shared<TemporalStructure>("Pool");
    {
        auto orbits = enumerate_weak_orders(4);
        int id = 0;
        for (int head = 0; head < 4; ++head) {
            std::vector<int> others;
            for (int v = 0; v < 4; ++v) {
                if (v != head) others.push_back(v);
            }
            for (int pick = 1; pick < 27; ++pick) { // 3^3 connective choices, minus empty
                int p = pick;
                OrderCNF cnf;
                cnf.variables = default_variables(4);
                Clause clause;
                for (int i = 0; i < 3; ++i) {
                    int choice = p % 3;
                    p /= 3;
                    if (choice == 1) clause.literals.push_back({head, Cmp::gt, others[static_cast<size_t>(i)]});
                    if (choice == 2) clause.literals.push_back({head, Cmp::ge, others[static_cast<size_t>(i)]});
                }
                if (clause.literals.empty()) continue;
                cnf.clauses.push_back(clause);
                pool_structure->add("C" + std::to_string(id++), relation_from_cnf(cnf));
            }
        }
    }
    size_t pool = pool_structure->size();
    std::vector<int> all_vars = {0, 1, 2, 3};
    long checked = 0;
    auto check_instance = [&](const std::vector<size_t>& picks) -> bool {
        Instance inst(pool_structure, {"a", "b", "c", "d"});
        for (size_t k : picks) {
            inst.add(pool_structure->relations()[k].name(), all_vars);
        }
        ++checked;
        return solve_min_closed(inst).sat == solve_oracle(inst).sat;
    };
    for (size_t i = 0; i < pool; ++i) {
        if (!check_instance({i})) {
            detail = "pool singleton " + std::to_string(i);
            return false;
        }
        for (size_t j = i + 1; j < pool; ++j) {
            if (!check_instance({i, j})) {
                detail = "pool pair " + std::to_string(i) + "," + std::to_string(j);
                return false;
            }
        }
    }
    for (size_t i = 0; i < pool; ++i) {
        for (size_t j = i + 1; j < pool; ++j) {
            for (size_t k = j + 1; k < pool; ++k) {
                if (!check_instance({i, j, k})) {
                    detail = "pool triple " + std::to_string(i) + "," + std::to_string(j) + "," +
                             std::to_string(k);
                    return false;
                }
            }
        }
    }

    // (b) 1000 seeded random instances with up to 7 variables
    std::mt19937_64 rng(90210);
    auto rel_pool = stp("R", {"Lt", "Leq", "Rmi", "RminLeq", "Rmix", "Eq", "Rmix4"});
    for (int trial = 0; trial < 1000; ++trial) {
        int nvars = 2 + static_cast<int>(rng() % 6); // up to 7
        std::vector<std::string> vars;
        for (int v = 0; v < nvars; ++v) vars.push_back("v" + std::to_string(v));
        Instance inst(rel_pool, vars);
        int natoms = 1 + static_cast<int>(rng() % 6);
        for (int a = 0; a < natoms; ++a) {
            const auto& rel = rel_pool->relations()[rng() % rel_pool->relations().size()];
            std::vector<int> tuple;
            for (int i = 0; i < rel.arity(); ++i) tuple.push_back(static_cast<int>(rng() % nvars));
            inst.add(rel.name(), tuple);
        }
        if (solve_min_closed(inst).sat != solve_oracle(inst).sat) {
            detail = "random min instance, trial " + std::to_string(trial);
            return false;
        }
    }

    // combiner vs combined oracle on 500 seeded instances over ll-preserved
    // sides, with the solver-call budget pinned at c = 4 (two disjuncts)
    std::mt19937_64 crng(31337);
    std::vector<std::vector<std::string>> sides = {{"Lt"}, {"Lt", "Leq"}, {"Lt", "Neq"}, {"Neq"}};
    double max_ratio = 0;
    for (int trial = 0; trial < 500; ++trial) {
        CombinedInstance ci;
        ci.structure1 = stp("A1", sides[crng() % sides.size()]);
        ci.structure2 = stp("A2", sides[crng() % sides.size()]);
        int nvars = 2 + static_cast<int>(crng() % 5); // up to 6
        for (int v = 0; v < nvars; ++v) ci.add_variable("v" + std::to_string(v));
        auto fill = [&](std::vector<AtomicConstraint>& side, const TemporalStructure& s) {
            int natoms = static_cast<int>(crng() % 5);
            for (int a = 0; a < natoms; ++a) {
                const auto& rel = s.relations()[crng() % s.relations().size()];
                std::vector<int> tuple;
                for (int i = 0; i < rel.arity(); ++i) tuple.push_back(static_cast<int>(crng() % nvars));
                side.push_back({rel.name(), tuple});
            }
            if (crng() % 4 == 0) {
                side.push_back(
                    {"=", {static_cast<int>(crng() % nvars), static_cast<int>(crng() % nvars)}});
            }
        };
        fill(ci.side1, *ci.structure1);
        fill(ci.side2, *ci.structure2);
        auto ep1 = derive_ep_definition(*ci.structure1);
        auto ep2 = derive_ep_definition(*ci.structure2);
        auto no = combine_nelson_oppen(ci, *ep1, *ep2);
        auto oracle = solve_combined_oracle(ci);
        if (no.sat != oracle.sat) {
            detail = "combiner disagrees, trial " + std::to_string(trial);
            return false;
        }
        double ratio = static_cast<double>(no.trace.solver_calls) /
                       (static_cast<double>(nvars) * nvars * nvars);
        max_ratio = std::max(max_ratio, ratio);
        if (no.trace.solver_calls > 4 * nvars * nvars * nvars) {
            detail = "call budget exceeded: " + std::to_string(no.trace.solver_calls) + " calls, n=" +
                     std::to_string(nvars);
            return false;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "pool=%zu clauses, %ld exhaustive instances, measured c=%.2f",
                  pool, checked, max_ratio);
    detail = buf;
    return true;
}

bool c11_classifier_battery(std::string& detail) {
    struct Single {
        std::vector<std::string> names;
        Outcome expect;
    };
    const std::vector<Single> singles = {
        {{"Betw"}, Outcome::np_complete},
        {{"T3"}, Outcome::np_complete},
        {{"Lt", "RminLeq", "Neq"}, Outcome::np_complete},
        {{"Lt"}, Outcome::p},
        {{"Lt", "RminLeq"}, Outcome::p},
        {{"Lt", "Rmix"}, Outcome::p},
    };
    for (const auto& s : singles) {
        auto a = st("A", s.names);
        auto v = classify_temporal(a);
        if (v.outcome != s.expect) {
            detail = "single " + s.names[0];
            return false;
        }
        // re-validate witnesses
        if (v.outcome == Outcome::p) {
            if (v.witness_op == "constant") {
                if (!has_constant_polymorphism(a)) {
                    detail = "constant witness invalid";
                    return false;
                }
            } else if (!preserves(OpSpec::parse(v.witness_op), a).preserved) {
                detail = "preserving witness invalid";
                return false;
            }
        } else {
            if (v.matrix.size() != 9) {
                detail = "matrix incomplete";
                return false;
            }
            for (const auto& row : v.matrix) {
                if (row.op == "constant") {
                    if (has_constant_polymorphism(a)) {
                        detail = "constant row invalid";
                        return false;
                    }
                } else if (preserves(OpSpec::parse(row.op), a.at(row.relation)).preserved) {
                    detail = "matrix row " + row.op + " invalid";
                    return false;
                }
            }
        }
    }
    struct Combo {
        std::vector<std::string> a1;
        std::vector<std::string> a2;
        Outcome expect;
        const char* route;
    };
    const std::vector<Combo> combos = {
        {{"Lt", "Leq"}, {"Lt", "Leq"}, Outcome::p, "both-bin-inj"},
        {{"Leq"}, {"Leq"}, Outcome::p, "both-constant"},
        {{"Lt", "Rmix"}, {"Lt"}, Outcome::np_complete, "no-route"},
        {{"Neq"}, {"Betw"}, Outcome::np_complete, "all-perms-union"},
    };
    for (const auto& c : combos) {
        auto v = classify_combination(st("A1", c.a1), st("A2", c.a2));
        if (v.outcome != c.expect || v.route != c.route) {
            detail = "combination " + c.a1[0] + "+" + c.a2[0] + " gave " + v.route;
            return false;
        }
    }
    return true;
}

bool c12_extractor(std::string& detail) {
    struct Case {
        std::vector<std::string> names;
        const char* route;
    };
    for (const Case& c : {Case{{"Lt", "Rmi"}, "mi"}, Case{{"X"}, "mx"}, Case{{"Lt", "T3"}, "t3"}}) {
        auto a = st("A", c.names);
        auto out = extract_rmix_definition(a);
        if (!out.applicable()) {
            detail = c.names[0] + std::string(" inapplicable: ") + out.reason;
            return false;
        }
        if (out.extraction->route != c.route) {
            detail = c.names[0] + std::string(" took route ") + out.extraction->route;
            return false;
        }
        // independent re-evaluation of the layered definition
        TemporalStructure env = a;
        for (const auto& step : out.extraction->steps) {
            env.add(step.name, eval_pp(step.formula, env));
        }
        if (!env.relations().back().same_orbits(builtin("Rmix"))) {
            detail = c.names[0] + std::string(" final step is not Rmix");
            return false;
        }
    }
    auto out = extract_rmix_definition(st("A", {"Lt", "Leq"}));
    if (out.applicable()) {
        detail = "(Q;<,<=) should be inapplicable";
        return false;
    }
    return true;
}

} // namespace

int main() {
    std::printf("acceptance suite, tool version %s\n", kVersion);
    criterion(1, "weak-order counts n=1..8 match the recurrence oracle", 5.0, c1_enumeration);
    criterion(2, "concrete mix table reproduces all 16 published entries", 0, c2_mix_table);
    criterion(3, "preservation battery on Rmix and Rmix_n", 30.0, c3_preservation_battery);
    criterion(4, "mix(mix(x,y),3y) realizes mi on the grid", 0, c4_grid);
    criterion(5, "normal-form synthesis matches preservation on all 8192 arity-3 relations", 600.0,
              c5_normal_form_sweep);
    criterion(6, "mx- and min-preservation imply mi-preservation on the same sweep", 600.0,
              c6_mx_min_implies_mi);
    criterion(7, "chi0 systems for Rmix, X and Betw", 0, c7_gf2);
    criterion(8, "constructive pp-definitions evaluate to their targets", 10.0,
              c8_constructive_definitions);
    criterion(9, "cross prevention on the strict and weak order", 0, c9_cross_prevention);
    criterion(10, "solver equivalences and the cubic call budget", 0, c10_solver_equivalences);
    criterion(11, "classifier battery with re-validated witnesses", 60.0, c11_classifier_battery);
    criterion(12, "Rmix extractor self-validation", 0, c12_extractor);
    if (failures == 0) {
        std::printf("all 12 criteria passed\n");
    } else {
        std::printf("%d criteria FAILED\n", failures);
    }
    return failures;
}
