#pragma once

#include <string>
#include <vector>

#include "tcsp/relation.hpp"

namespace tcsp {

enum class Cmp { lt, le, eq, ne, gt, ge };

const char* cmp_token(Cmp c);
bool cmp_holds(Cmp c, int lhs_rank, int rhs_rank);

// One literal of a quantifier-free order formula: variable ∘ variable,
// variables referenced by index into the owning formula's variable list.
struct Literal {
    int lhs = 0;
    Cmp cmp = Cmp::lt;
    int rhs = 0;

    bool operator==(const Literal&) const = default;
};

struct Clause {
    std::vector<Literal> literals;
    bool is_false = false; // the ⊥ clause

    bool operator==(const Clause&) const = default;
};

// Quantifier-free order formula in conjunctive normal form over a fixed
// ordered variable list.
struct OrderCNF {
    std::vector<std::string> variables;
    std::vector<Clause> clauses;

    int arity() const { return static_cast<int>(variables.size()); }
    bool satisfied_by(const WeakOrder& w) const;
    std::string to_string() const;
};

// Variable list x1..xn.
std::vector<std::string> default_variables(int n);

// Orbit set of all weak orders on the formula's variable list that satisfy
// every clause. A ⊥ clause yields the empty relation.
TemporalRelation relation_from_cnf(const OrderCNF& formula, std::string name = "");

// Complete order description of a single orbit as a CNF of unit clauses
// (block chain plus in-block equalities).
OrderCNF orbit_description(const WeakOrder& w, const std::vector<std::string>& variables);

// Serializes a relation to a DNF of complete order descriptions.
std::vector<OrderCNF> relation_to_dnf(const TemporalRelation& r);

// Evaluates a DNF (union of the CNF disjuncts' relations); all disjuncts must
// share one variable list.
TemporalRelation relation_from_dnf(const std::vector<OrderCNF>& disjuncts, std::string name = "");

} // namespace tcsp
