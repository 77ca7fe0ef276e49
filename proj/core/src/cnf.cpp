#include "tcsp/cnf.hpp"

#include <algorithm>

#include "tcsp/error.hpp"

namespace tcsp {

const char* cmp_token(Cmp c) {
    switch (c) {
        case Cmp::lt: return "<";
        case Cmp::le: return "<=";
        case Cmp::eq: return "=";
        case Cmp::ne: return "!=";
        case Cmp::gt: return ">";
        case Cmp::ge: return ">=";
    }
    return "?";
}

bool cmp_holds(Cmp c, int a, int b) {
    switch (c) {
        case Cmp::lt: return a < b;
        case Cmp::le: return a <= b;
        case Cmp::eq: return a == b;
        case Cmp::ne: return a != b;
        case Cmp::gt: return a > b;
        case Cmp::ge: return a >= b;
    }
    return false;
}

bool OrderCNF::satisfied_by(const WeakOrder& w) const {
    for (const auto& clause : clauses) {
        if (clause.is_false) return false;
        bool ok = false;
        for (const auto& lit : clause.literals) {
            if (cmp_holds(lit.cmp, w.rank(lit.lhs), w.rank(lit.rhs))) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

std::string OrderCNF::to_string() const {
    if (clauses.empty()) return "true";
    std::string s;
    for (size_t i = 0; i < clauses.size(); ++i) {
        if (i) s += " & ";
        const auto& c = clauses[i];
        if (c.is_false) {
            s += "false";
            continue;
        }
        bool paren = c.literals.size() > 1 && clauses.size() > 1;
        if (paren) s += "(";
        for (size_t j = 0; j < c.literals.size(); ++j) {
            if (j) s += " | ";
            const auto& l = c.literals[j];
            s += variables[static_cast<size_t>(l.lhs)];
            s += " ";
            s += cmp_token(l.cmp);
            s += " ";
            s += variables[static_cast<size_t>(l.rhs)];
        }
        if (paren) s += ")";
    }
    return s;
}

std::vector<std::string> default_variables(int n) {
    std::vector<std::string> vars;
    vars.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    return vars;
}

namespace {

void check_formula(const OrderCNF& formula) {
    int n = formula.arity();
    if (n < 1) throw ContractError("order formula has no variables");
    if (n > Config::global().max_arity) {
        throw CapExceeded("order formula arity exceeds the configured cap");
    }
    for (const auto& clause : formula.clauses) {
        for (const auto& lit : clause.literals) {
            if (lit.lhs < 0 || lit.lhs >= n || lit.rhs < 0 || lit.rhs >= n) {
                throw ContractError("literal references an unknown variable");
            }
        }
    }
}

} // namespace

TemporalRelation relation_from_cnf(const OrderCNF& formula, std::string name) {
    check_formula(formula);
    std::vector<WeakOrder> orbits;
    for (const auto& w : enumerate_weak_orders(formula.arity())) {
        if (formula.satisfied_by(w)) orbits.push_back(w);
    }
    return TemporalRelation(formula.arity(), std::move(orbits), std::move(name));
}

OrderCNF orbit_description(const WeakOrder& w, const std::vector<std::string>& variables) {
    if (static_cast<int>(variables.size()) != w.size()) {
        throw ContractError("orbit_description: variable list does not match orbit length");
    }
    OrderCNF cnf;
    cnf.variables = variables;
    std::vector<int> leader(static_cast<size_t>(w.block_count()), -1);
    for (int i = 0; i < w.size(); ++i) {
        int b = w.rank(i);
        if (leader[static_cast<size_t>(b)] < 0) {
            leader[static_cast<size_t>(b)] = i;
        } else {
            cnf.clauses.push_back({{{leader[static_cast<size_t>(b)], Cmp::eq, i}}, false});
        }
    }
    for (int b = 0; b + 1 < w.block_count(); ++b) {
        cnf.clauses.push_back(
            {{{leader[static_cast<size_t>(b)], Cmp::lt, leader[static_cast<size_t>(b + 1)]}}, false});
    }
    if (cnf.clauses.empty()) {
        // constant single-block orbit on one variable: x1 = x1
        cnf.clauses.push_back({{{0, Cmp::eq, 0}}, false});
    }
    return cnf;
}

std::vector<OrderCNF> relation_to_dnf(const TemporalRelation& r) {
    auto vars = default_variables(r.arity());
    std::vector<OrderCNF> out;
    out.reserve(r.orbit_count());
    for (const auto& w : r.orbits()) out.push_back(orbit_description(w, vars));
    if (out.empty()) {
        OrderCNF bot;
        bot.variables = vars;
        bot.clauses.push_back({{}, true});
        out.push_back(bot);
    }
    return out;
}

TemporalRelation relation_from_dnf(const std::vector<OrderCNF>& disjuncts, std::string name) {
    if (disjuncts.empty()) throw ContractError("relation_from_dnf: no disjuncts");
    for (const auto& d : disjuncts) check_formula(d);
    int n = disjuncts.front().arity();
    std::vector<WeakOrder> orbits;
    for (const auto& w : enumerate_weak_orders(n)) {
        for (const auto& d : disjuncts) {
            if (d.arity() != n) throw ContractError("relation_from_dnf: mixed arities");
            if (d.satisfied_by(w)) {
                orbits.push_back(w);
                break;
            }
        }
    }
    return TemporalRelation(n, std::move(orbits), std::move(name));
}

} // namespace tcsp
