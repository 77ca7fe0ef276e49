#include "doctest.h"

#include <random>

#include "tcsp/builtins.hpp"
#include "tcsp/nelson_oppen.hpp"

using namespace tcsp;

namespace {

std::shared_ptr<TemporalStructure> structure(std::string name, const std::vector<std::string>& names) {
    return std::make_shared<TemporalStructure>(TemporalStructure::of_builtins(std::move(name), names));
}

} // namespace

TEST_CASE("ep definitions validate") {
    auto a = structure("A", {"Lt", "Leq"});
    auto ep = ep_from_less(*a);
    CHECK(ep.validate(*a));
    auto b = structure("B", {"Neq"});
    auto derived = derive_ep_definition(*b);
    REQUIRE(derived.has_value());
    CHECK(derived->validate(*b));
    CHECK(!derive_ep_definition(*structure("C", {"Leq"})).has_value());

    EpDefinition broken;
    broken.disjuncts.push_back([] {
        PPFormula f;
        f.num_free = 2;
        f.vars = {"x", "y"};
        f.atoms.push_back({"Leq", {0, 1}});
        return f;
    }());
    std::string why;
    CHECK(!broken.validate(*a, &why)); // <= admits the equal pair
}

TEST_CASE("the antisymmetry merge scenario") {
    // S1 = {x <=1 y, y <=1 x}, S2 = {x <2 z, z <2 y}: the pair (x,y) merges
    // and side 2 becomes x <2 z <2 x, unsatisfiable.
    CombinedInstance ci;
    ci.structure1 = structure("A1", {"Lt", "Leq"});
    ci.structure2 = structure("A2", {"Lt", "Leq"});
    ci.add_variable("x");
    ci.add_variable("y");
    ci.add_variable("z");
    ci.side1.push_back({"Leq", {0, 1}});
    ci.side1.push_back({"Leq", {1, 0}});
    ci.side2.push_back({"Lt", {0, 2}});
    ci.side2.push_back({"Lt", {2, 1}});
    auto ep1 = ep_from_less(*ci.structure1);
    auto ep2 = ep_from_less(*ci.structure2);
    auto res = combine_nelson_oppen(ci, ep1, ep2);
    CHECK(!res.sat);
    // the first merge identifies x and y; once side 2 is unsatisfiable the
    // remaining pairs merge too
    REQUIRE(!res.trace.merges.empty());
    CHECK(res.trace.merges[0].kept == "x");
    CHECK(res.trace.merges[0].merged == "y");
    CHECK(res.trace.merges[0].side == 1);
    CHECK(!solve_combined_oracle(ci).sat);
}

TEST_CASE("no merges when every pair is separable") {
    CombinedInstance ci;
    ci.structure1 = structure("A1", {"Lt", "Leq"});
    ci.structure2 = structure("A2", {"Lt", "Leq"});
    ci.add_variable("x");
    ci.add_variable("y");
    ci.side1.push_back({"Leq", {0, 1}});
    ci.side2.push_back({"Lt", {1, 0}});
    auto res = combine_nelson_oppen(ci, ep_from_less(*ci.structure1), ep_from_less(*ci.structure2));
    CHECK(res.sat);
    CHECK(res.trace.merges.empty());
    CHECK(solve_combined_oracle(ci).sat);
}

TEST_CASE("an empty side reduces to the other side's solver") {
    CombinedInstance ci;
    ci.structure1 = structure("A1", {"Lt"});
    ci.structure2 = structure("A2", {"Lt"});
    ci.add_variable("x");
    ci.add_variable("y");
    ci.side1.push_back({"Lt", {0, 1}});
    auto res = combine_nelson_oppen(ci, ep_from_less(*ci.structure1), ep_from_less(*ci.structure2));
    CHECK(res.sat);

    ci.side1.push_back({"Lt", {1, 0}});
    auto res2 = combine_nelson_oppen(ci, ep_from_less(*ci.structure1), ep_from_less(*ci.structure2));
    CHECK(!res2.sat);
}

TEST_CASE("missing ep definitions are refused") {
    CombinedInstance ci;
    ci.structure1 = structure("A1", {"Leq"});
    ci.structure2 = structure("A2", {"Lt"});
    ci.add_variable("x");
    EpDefinition empty;
    CHECK_THROWS_AS(combine_nelson_oppen(ci, empty, ep_from_less(*ci.structure2)), ContractError);
}

TEST_CASE("combiner agrees with the combined oracle on random ll-preserved instances") {
    std::mt19937_64 rng(424242);
    std::vector<std::vector<std::string>> pool = {
        {"Lt"}, {"Lt", "Leq"}, {"Lt", "Neq"}, {"Neq"}};
    int checked = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto names1 = pool[rng() % pool.size()];
        auto names2 = pool[rng() % pool.size()];
        CombinedInstance ci;
        ci.structure1 = structure("A1", names1);
        ci.structure2 = structure("A2", names2);
        auto ep1 = derive_ep_definition(*ci.structure1);
        auto ep2 = derive_ep_definition(*ci.structure2);
        REQUIRE(ep1.has_value());
        REQUIRE(ep2.has_value());
        int nvars = 2 + static_cast<int>(rng() % 4); // up to 5
        for (int v = 0; v < nvars; ++v) ci.add_variable("v" + std::to_string(v));
        auto add_side = [&](std::vector<AtomicConstraint>& side, const TemporalStructure& s) {
            int natoms = static_cast<int>(rng() % 4);
            for (int k = 0; k < natoms; ++k) {
                const auto& rel = s.relations()[rng() % s.relations().size()];
                std::vector<int> tuple;
                for (int i = 0; i < rel.arity(); ++i) tuple.push_back(static_cast<int>(rng() % nvars));
                side.push_back({rel.name(), tuple});
            }
            if (rng() % 4 == 0) {
                side.push_back({"=", {static_cast<int>(rng() % nvars), static_cast<int>(rng() % nvars)}});
            }
        };
        add_side(ci.side1, *ci.structure1);
        add_side(ci.side2, *ci.structure2);
        auto combined = solve_combined_oracle(ci);
        auto no = combine_nelson_oppen(ci, *ep1, *ep2);
        CHECK(combined.sat == no.sat);
        // merges are entailed equalities: re-check against the oracle
        for (const auto& m : no.trace.merges) {
            CombinedInstance forced = ci;
            int k = forced.variable(m.kept);
            int l = forced.variable(m.merged);
            forced.side1.push_back({"=", {k, l}});
            CHECK(solve_combined_oracle(forced).sat == combined.sat);
        }
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("solver call budget is cubic") {
    std::mt19937_64 rng(7);
    for (int nvars : {2, 3, 4, 5, 6}) {
        CombinedInstance ci;
        ci.structure1 = structure("A1", {"Lt", "Leq"});
        ci.structure2 = structure("A2", {"Lt", "Leq"});
        for (int v = 0; v < nvars; ++v) ci.add_variable("v" + std::to_string(v));
        for (int v = 0; v + 1 < nvars; ++v) {
            ci.side1.push_back({"Leq", {v, v + 1}});
            ci.side2.push_back({"Leq", {v + 1, v}});
        }
        auto res = combine_nelson_oppen(ci, ep_from_less(*ci.structure1), ep_from_less(*ci.structure2));
        int d = 2; // disjuncts per ep-definition
        CHECK(res.trace.solver_calls <= 2 * d * nvars * nvars * nvars + 2);
    }
}

TEST_CASE("independence is certified for ll-preserved structures") {
    auto a = structure("A", {"Lt"});
    auto res = independence_falsifier(a, 1, 10, 5);
    CHECK(res.status == IndependenceStatus::certified_independent);
    auto eq = structure("E", {"Eq"});
    CHECK(independence_falsifier(eq, 1, 10, 5).status == IndependenceStatus::certified_independent);
}

TEST_CASE("independence fails for (Q;<,RminLeq)") {
    auto a = structure("A", {"Lt", "RminLeq"});
    auto res = independence_falsifier(a, 20240817, 4000, 5);
    REQUIRE(res.status == IndependenceStatus::violated);
    const auto& ce = *res.counterexample;
    // replay: each pair individually satisfiable, the conjunction not
    Instance joint(ce.instance);
    for (const auto& [x, y] : ce.pairs) {
        Instance single(ce.instance);
        single.add("!=", {single.variable(x), single.variable(y)});
        CHECK(solve_oracle(single).sat);
        joint.add("!=", {joint.variable(x), joint.variable(y)});
    }
    CHECK(!solve_oracle(joint).sat);
}
