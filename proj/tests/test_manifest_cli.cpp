#include "doctest.h"

#include "tcsp/builtins.hpp"
#include "tcsp/report.hpp"

using namespace tcsp;

namespace {

const char* kDemo = R"(# battery structures
structure A {
  rel Lt/2 := x1 < x2;
  rel Rmix/3 := (x1 >= x2 | x1 > x3) & (x2 >= x1 | x2 > x3);
}
structure B {
  rel Betw := @Betw;
  rel Leq/2 := x1 <= x2;
}
structure X1 {
  rel X := @X;
}
instance I over A {
  A.Rmix(x,y,z);
  A.Lt(x,y);
}
instance J over A,B {
  A.Lt(x,y);
  B.Leq(y,x);
}
instance K over A,B {
  A.Lt(x,y);
  x = y;
}
)";

} // namespace

TEST_CASE("manifest parsing") {
    auto m = parse_manifest(kDemo);
    REQUIRE(m.structures.size() == 3);
    auto a = m.find_structure("A");
    REQUIRE(a);
    CHECK(a->at("Lt").same_orbits(builtin("Lt")));
    CHECK(a->at("Rmix").same_orbits(builtin("Rmix")));
    auto b = m.find_structure("B");
    CHECK(b->at("Betw").same_orbits(builtin("Betw")));

    const auto* i = m.find_instance("I");
    REQUIRE(i);
    CHECK(!i->combined());
    CHECK(i->variables == std::vector<std::string>({"x", "y", "z"}));
    const auto* j = m.find_instance("J");
    REQUIRE(j);
    CHECK(j->combined());
    auto ci = m.build_combined(*j);
    CHECK(ci.side1.size() == 1);
    CHECK(ci.side2.size() == 1);
    // shared equality lands on both sides
    auto k = m.build_combined(*m.find_instance("K"));
    CHECK(k.side1.size() == 2);
    CHECK(k.side2.size() == 1);
}

TEST_CASE("round trip: parse, serialize, parse") {
    auto m1 = parse_manifest(kDemo);
    auto text = serialize_manifest(m1);
    auto m2 = parse_manifest(text);
    REQUIRE(m1.structures.size() == m2.structures.size());
    for (size_t i = 0; i < m1.structures.size(); ++i) {
        const auto& s1 = *m1.structures[i];
        const auto& s2 = *m2.structures[i];
        CHECK(s1.name() == s2.name());
        REQUIRE(s1.size() == s2.size());
        for (size_t r = 0; r < s1.size(); ++r) {
            CHECK(s1.relations()[r].name() == s2.relations()[r].name());
            CHECK(s1.relations()[r].same_orbits(s2.relations()[r]));
        }
    }
    REQUIRE(m1.instances.size() == m2.instances.size());
    for (size_t i = 0; i < m1.instances.size(); ++i) {
        CHECK(m1.instances[i].name == m2.instances[i].name);
        CHECK(m1.instances[i].variables == m2.instances[i].variables);
        CHECK(m1.instances[i].constraints.size() == m2.instances[i].constraints.size());
    }
    // serialization is canonical: a second round is byte-identical
    CHECK(serialize_manifest(m2) == text);
}

TEST_CASE("parse errors carry deterministic positions") {
    try {
        parse_manifest("structure A {\n  rel Lt/2 := x1 << x2;\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_manifest("structure A { rel R/2 := x3 < x1; }"), ParseError);
    CHECK_THROWS_AS(parse_manifest("structure A { rel R := @NoSuch; }"), ParseError);
    CHECK_THROWS_AS(parse_manifest("instance I over Missing { }"), ParseError);
    CHECK_THROWS_AS(parse_manifest("structure A { rel Lt/2 := x1 < x2; } "
                                   "instance I over A { A.Lt(x,y,z); }"),
                    ParseError);
    CHECK_THROWS_AS(parse_manifest("structure A { rel Lt/2 := x1 < x2; } "
                                   "instance I over A { A.Nope(x,y); }"),
                    ParseError);
}

TEST_CASE("bottom clause and arity checks in the DSL") {
    auto m = parse_manifest("structure A { rel Never/2 := false; rel Lt/2 := x1 < x2; }");
    CHECK(m.find_structure("A")->at("Never").is_empty());
    CHECK_THROWS_AS(parse_manifest("structure A { rel B/2 := @Betw; }"), ParseError);
}

TEST_CASE("run_command: classify Betweenness") {
    auto m = parse_manifest(kDemo);
    auto res = run_command("classify", m, {{"structure", "B"}}, {});
    CHECK(res.exit_code == 1);
    CHECK(res.report["result"]["verdict"]["label"] == "NP-complete");
    CHECK(res.report["result"]["verdict"]["matrix"].size() == 9);
    CHECK(res.report["version"] == kVersion);
    CHECK(res.report["seed"] == 0);
    CHECK(res.report["caps"]["arity"] == 6);
}

TEST_CASE("run_command: poly-check and normal-form") {
    Manifest empty;
    auto res = run_command("poly-check", empty, {{"op", "mix"}, {"rel", "@Rmix"}}, {});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["preserved"] == true);

    auto neg = run_command("poly-check", empty, {{"op", "lex"}, {"rel", "@Rmix"}}, {});
    CHECK(neg.exit_code == 1);
    CHECK(neg.report["result"]["witness"].is_object());

    auto nf = run_command("normal-form", empty, {{"form", "min"}, {"rel", "@Rmix"}}, {});
    CHECK(nf.exit_code == 0);
    CHECK(nf.report["result"]["cnf"].is_string());
    auto nf2 = run_command("normal-form", empty, {{"form", "min"}, {"rel", "@Betw"}}, {});
    CHECK(nf2.exit_code == 1);
}

TEST_CASE("run_command: extract-rmix over (Q;X)") {
    auto m = parse_manifest(kDemo);
    auto res = run_command("extract-rmix", m, {{"structure", "X1"}}, {});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["formula"] == "∃h (X(z,z,h) ∧ X(x,y,h))");
    CHECK(res.report["result"]["validated"] == true);
    CHECK(res.report["result"]["conditional"] == false);
}

TEST_CASE("run_command: solve and solve-comb") {
    auto m = parse_manifest(kDemo);
    auto res = run_command("solve", m, {{"instance", "I"}}, {});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["witness"]["z"] == 0);

    auto comb = run_command("solve-comb", m, {{"instance", "J"}}, {});
    CHECK(comb.exit_code == 0);
    auto eq = run_command("solve-comb", m, {{"instance", "K"}}, {});
    CHECK(eq.exit_code == 1); // x<y on side 1 against x=y
}

TEST_CASE("run_command: combine with derived and explicit ep definitions") {
    auto m = parse_manifest(R"(
structure L1 { rel Lt/2 := x1 < x2; rel Leq/2 := x1 <= x2; }
structure L2 { rel Lt/2 := x1 < x2; rel Leq/2 := x1 <= x2; }
instance M over L1,L2 {
  L1.Leq(x,y);
  L1.Leq(y,x);
  L2.Lt(x,z);
  L2.Lt(z,y);
}
)");
    auto res = run_command("combine", m, {{"instance", "M"}}, {});
    CHECK(res.exit_code == 1);
    CHECK(res.report["result"]["trace"]["merges"][0]["kept"] == "x");
    CHECK(res.report["result"]["trace"]["merges"][0]["merged"] == "y");

    auto res2 = run_command(
        "combine", m,
        {{"instance", "M"}, {"ep1", "x < y; y < x"}, {"ep2", "x < y; y < x"}}, {});
    CHECK(res2.exit_code == 1);
    CHECK(res2.report["result"]["trace"]["solver_calls"] == res.report["result"]["trace"]["solver_calls"]);
}

TEST_CASE("run_command: cross-prevention") {
    auto m = parse_manifest("structure S { rel Lt/2 := x1 < x2; }");
    auto yes = run_command("cross-prevention", m,
                           {{"structure", "S"}, {"formula", "u < x & y < v"}}, {});
    CHECK(yes.exit_code == 0);
    CHECK(yes.report["result"]["prevents"] == true);

    auto m2 = parse_manifest("structure S { rel Leq/2 := x1 <= x2; }");
    auto no = run_command("cross-prevention", m2,
                          {{"structure", "S"}, {"formula", "u <= x & y <= v"}}, {});
    CHECK(no.exit_code == 1);
    CHECK(no.report["result"]["condition3_unsatisfiable"] == false);
}

TEST_CASE("run_command: ppdef-search") {
    auto m = parse_manifest("structure S { rel T3 := @T3; }");
    auto res = run_command("ppdef-search", m, {{"structure", "S"}, {"target", "@Leq"}}, {});
    CHECK(res.exit_code == 0);
    CHECK(res.report["result"]["found"] == true);
    auto miss = run_command("ppdef-search", parse_manifest("structure S { rel Neq := @Neq; }"),
                            {{"structure", "S"}, {"target", "@Lt"}, {"max-atoms", "3"}}, {});
    CHECK(miss.exit_code == 1);
}

TEST_CASE("reports are byte-stable for a fixed seed") {
    auto m = parse_manifest(kDemo);
    auto r1 = run_command("classify", m, {{"structure", "A"}}, {});
    auto r2 = run_command("classify", m, {{"structure", "A"}}, {});
    CHECK(r1.report.dump(2) == r2.report.dump(2));
}

TEST_CASE("errors surface with a module tag and exit code 2") {
    Manifest empty;
    auto res = run_command("classify", empty, {{"structure", "nope"}}, {});
    CHECK(res.exit_code == 2);
    CHECK(res.report["error"]["module"] == "lookup");
    auto bad = run_command("no-such-command", empty, {}, {});
    CHECK(bad.exit_code == 2);
}

TEST_CASE("pp formula parsing with sugar operators") {
    auto m = parse_manifest("structure S { rel Lt/2 := x1 < x2; rel T3 := @T3; }");
    auto s = m.find_structure("S");
    auto f = parse_pp_formula("exists h . T3(x,y,h) & x < h", *s, {"x", "y"});
    CHECK(f.vars.size() == 3);
    CHECK(f.atoms.size() == 2);
    CHECK(f.atoms[1].rel == "Lt");
    // x > h resolves to Lt with swapped arguments
    auto g = parse_pp_formula("x > y", *s, {"x", "y"});
    CHECK(g.atoms[0].rel == "Lt");
    CHECK(g.atoms[0].args == std::vector<int>({1, 0}));
    CHECK_THROWS_AS(parse_pp_formula("x <= y", *s, {"x", "y"}), ParseError);
    CHECK_THROWS_AS(parse_pp_formula("T3(x,y,w)", *s, {"x", "y"}), ParseError);
}
