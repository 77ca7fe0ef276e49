#include "doctest.h"

#include "tcsp/builtins.hpp"
#include "tcsp/pp_formula.hpp"
#include "tcsp/rmix.hpp"

using namespace tcsp;

namespace {

PPFormula pp(int num_free, std::vector<std::string> vars, std::vector<PPAtom> atoms) {
    PPFormula f;
    f.num_free = num_free;
    f.vars = std::move(vars);
    f.atoms = std::move(atoms);
    return f;
}

} // namespace

TEST_CASE("exists z. T3(x,y,z) defines <= over (Q;T3)") {
    auto a = TemporalStructure::of_builtins("A", {"T3"});
    auto r = eval_pp(pp(2, {"x", "y", "z"}, {{"T3", {0, 1, 2}}}), a);
    CHECK(r.same_orbits(builtin("Leq")));
}

TEST_CASE("exists z. T3(z,x,y) defines != over (Q;T3)") {
    auto a = TemporalStructure::of_builtins("A", {"T3"});
    auto r = eval_pp(pp(2, {"x", "y", "z"}, {{"T3", {2, 0, 1}}}), a);
    CHECK(r.same_orbits(builtin("Neq")));
}

TEST_CASE("exists h (X(z,z,h) and X(x,y,h)) defines Rmix over (Q;X)") {
    auto a = TemporalStructure::of_builtins("A", {"X"});
    auto r = eval_pp(pp(3, {"x", "y", "z", "h"}, {{"X", {2, 2, 3}}, {"X", {0, 1, 3}}}), a);
    CHECK(r.same_orbits(builtin("Rmix")));
}

TEST_CASE("the Prop-style S^mi and RminLeq formulas over (Q;T3) with <=") {
    auto a = TemporalStructure::of_builtins("A", {"T3", "Leq"});
    // RminLeq(x,y,z) = exists x',y',z' (T3(x',y',z') & x'<=x & y<=y' & z<=z')
    auto rminleq = eval_pp(pp(3, {"x", "y", "z", "xp", "yp", "zp"},
                              {{"T3", {3, 4, 5}}, {"Leq", {3, 0}}, {"Leq", {1, 4}}, {"Leq", {2, 5}}}),
                           a);
    CHECK(rminleq.same_orbits(builtin("RminLeq")));
    // Smi(x,y,z) = exists u,v (T3(x,u,v) & u != y & v >= z); over (Q;T3) the
    // disequality itself is exists w. T3(w,u,y)
    auto smi = eval_pp(pp(3, {"x", "y", "z", "u", "v", "w"},
                          {{"T3", {0, 3, 4}}, {"T3", {5, 3, 1}}, {"Leq", {2, 4}}}),
                       a);
    CHECK(smi.same_orbits(builtin("Smi")));
}

TEST_CASE("equality atoms") {
    auto a = TemporalStructure::of_builtins("A", {"Lt"});
    auto r = eval_pp(pp(2, {"x", "y"}, {{"=", {0, 1}}}), a);
    CHECK(r.same_orbits(builtin("Eq")));
}

TEST_CASE("eval_pp error paths") {
    auto a = TemporalStructure::of_builtins("A", {"Lt"});
    CHECK_THROWS_AS(eval_pp(pp(2, {"x", "y"}, {{"Gt", {0, 1}}}), a), LookupError);
    CHECK_THROWS_AS(eval_pp(pp(2, {"x", "y"}, {{"Lt", {0}}}), a), ContractError);
    PPFormula big;
    big.num_free = 2;
    for (int i = 0; i < Config::global().max_eval_vars + 1; ++i) {
        big.vars.push_back("v" + std::to_string(i));
    }
    CHECK_THROWS_AS(eval_pp(big, a), CapExceeded);
}

TEST_CASE("a formula with an empty relation evaluates to the empty relation") {
    auto a = TemporalStructure::of_builtins("A", {"False", "Lt"});
    auto r = eval_pp(pp(2, {"x", "y", "h"}, {{"Lt", {0, 1}}, {"False", {2}}}), a);
    CHECK(r.is_empty());
}

TEST_CASE("rmix_n direct definition") {
    CHECK(rmix_n(3).same_orbits(builtin("Rmix")));
    CHECK_THROWS_AS(rmix_n(2), ContractError);
    // n=4: derived by filtering all 75 weak orders through the definition
    auto direct = rmix_n(4);
    int count = 0;
    for (const auto& w : enumerate_weak_orders(4)) {
        int m12 = std::min(w.rank(0), w.rank(1));
        int mrest = std::min(w.rank(2), w.rank(3));
        bool member = !(mrest >= m12) || w.rank(0) == w.rank(1);
        if (member) {
            ++count;
            CHECK(direct.contains(w));
        } else {
            CHECK(!direct.contains(w));
        }
    }
    CHECK(static_cast<int>(direct.orbit_count()) == count);
}

TEST_CASE("rmix_n inductive formula evaluates to the direct definition") {
    auto a = TemporalStructure::of_builtins("A", {"Lt", "Rmix"});
    CHECK(rmix_n_inductive(3).atoms.size() == 1);
    CHECK(eval_pp(rmix_n_inductive(3), a).same_orbits(rmix_n(3)));
    CHECK(eval_pp(rmix_n_inductive(4), a).same_orbits(rmix_n(4)));
    CHECK(eval_pp(rmix_n_inductive(5), a).same_orbits(rmix_n(5)));
}

TEST_CASE("formula printing and inlining") {
    auto f = pp(3, {"x", "y", "z", "h"}, {{"X", {2, 2, 3}}, {"X", {0, 1, 3}}});
    CHECK(f.to_string() == "∃h (X(z,z,h) ∧ X(x,y,h))");
    PPFormula outer = pp(2, {"a", "b"}, {});
    outer.inline_formula(pp(2, {"x", "y", "w"}, {{"T3", {0, 1, 2}}}), {1, 0});
    REQUIRE(outer.atoms.size() == 1);
    CHECK(outer.atoms[0].args == std::vector<int>({1, 0, 2}));
    CHECK(outer.vars.size() == 3);
}
