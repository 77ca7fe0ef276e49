#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tcsp/cnf.hpp"
#include "tcsp/instance.hpp"
#include "tcsp/pp_formula.hpp"
#include "tcsp/structure.hpp"

namespace tcsp {

// Syntax error with a deterministic source position.
struct ParseError : Error {
    int line;
    int column;
    ParseError(const std::string& message, int line_, int column_)
        : Error("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + message),
          line(line_),
          column(column_) {}
};

// How a relation was declared, kept for faithful re-serialization.
struct RelDecl {
    std::string name;
    std::variant<OrderCNF, std::string> source; // formula or builtin reference
};

struct StructureDecl {
    std::string name;
    std::vector<RelDecl> relations;
};

struct InstanceDecl {
    std::string name;
    std::vector<std::string> structures; // one or two names
    std::vector<std::string> variables;
    // constraints as (side, relation, variable names); side is 1 or 2, "="
    // constraints are shared and tagged side 0
    struct Constraint {
        int side;
        std::string rel;
        std::vector<std::string> vars;
    };
    std::vector<Constraint> constraints;

    bool combined() const { return structures.size() == 2; }
};

// Parsed manifest: named structures and instances. Structures are resolved
// eagerly (builtin references and CNFs become orbit sets at parse time).
struct Manifest {
    std::vector<StructureDecl> structure_decls;
    std::vector<std::shared_ptr<TemporalStructure>> structures;
    std::vector<InstanceDecl> instances;

    std::shared_ptr<TemporalStructure> find_structure(const std::string& name) const;
    const InstanceDecl* find_instance(const std::string& name) const;

    Instance build_instance(const InstanceDecl& decl) const;
    CombinedInstance build_combined(const InstanceDecl& decl) const;
};

// Grammar:
//   structure NAME { rel R/k := <CNF over x1..xk>; rel B := @Builtin; ... }
//   instance NAME over A [, B] { A.R(x,y,...); x = y; ... }
// CNF literals are `xi OP xj` with OP in < <= = != > >=, clauses joined by
// `|` inside parentheses, conjuncts by `&`; `false` is the bottom clause.
// Comments run from '#' to end of line.
Manifest parse_manifest(const std::string& text);

// Canonical text form; parse(serialize(parse(t))) == parse(t).
std::string serialize_manifest(const Manifest& manifest);

// A pp-formula in the CLI syntax `[exists h1 h2 .] atom & atom`, where an
// atom is `R(v,...)` over the structure's signature, `v = w`, or an order
// literal `v OP w` resolved against the structure's relations by orbit set.
// free_vars fixes the free variable names; every other variable must be
// bound by the exists prefix.
PPFormula parse_pp_formula(const std::string& text, const TemporalStructure& a,
                           const std::vector<std::string>& free_vars);

} // namespace tcsp
