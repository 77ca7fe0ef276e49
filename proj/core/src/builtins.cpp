#include "tcsp/builtins.hpp"

#include <map>
#include <mutex>

#include "tcsp/cnf.hpp"
#include "tcsp/error.hpp"

namespace tcsp {

namespace {

OrderCNF parse_clauses(int arity, const std::vector<std::vector<Literal>>& clauses) {
    OrderCNF cnf;
    cnf.variables = default_variables(arity);
    for (const auto& lits : clauses) cnf.clauses.push_back({lits, false});
    return cnf;
}

// min(a3,...,an) >= min(a1,a2) => a1 = a2, written as the clause pair
// (x1 >= x2 | x1 > x3 | ... ) & (x2 >= x1 | x2 > x3 | ...).
TemporalRelation make_rmix_n(int n, const std::string& name) {
    std::vector<Literal> cx = {{0, Cmp::ge, 1}};
    std::vector<Literal> cy = {{1, Cmp::ge, 0}};
    for (int i = 2; i < n; ++i) {
        cx.push_back({0, Cmp::gt, i});
        cy.push_back({1, Cmp::gt, i});
    }
    return relation_from_cnf(parse_clauses(n, {cx, cy}), name);
}

TemporalRelation make(const std::string& name) {
    // x1,x2,x3,x4 are indices 0..3 below
    if (name == "Rmix") return make_rmix_n(3, "Rmix");
    if (name.rfind("Rmix", 0) == 0 && name.size() > 4) {
        int n = std::stoi(name.substr(4));
        if (n < 3) throw LookupError("builtin: " + name + " needs arity >= 3");
        return make_rmix_n(n, name);
    }
    if (name == "Rmi") {
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::ge, 1}, {0, Cmp::gt, 2}}}), "Rmi");
    }
    if (name == "RminLeq") {
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::ge, 1}, {0, Cmp::ge, 2}}}), "RminLeq");
    }
    if (name == "Smi") {
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::ne, 1}, {0, Cmp::ge, 2}}}), "Smi");
    }
    if (name == "T3") {
        // x1=x2 < x3  or  x1=x3 < x2
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::eq, 1}, {0, Cmp::eq, 2}},
                                                   {{1, Cmp::ne, 2}},
                                                   {{0, Cmp::le, 1}},
                                                   {{0, Cmp::le, 2}}}),
                                 "T3");
    }
    if (name == "X") {
        // exactly two coordinates equal, strictly below the third
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::eq, 1}, {0, Cmp::eq, 2}, {1, Cmp::eq, 2}},
                                                   {{0, Cmp::ne, 1}, {0, Cmp::lt, 2}},
                                                   {{0, Cmp::ne, 2}, {0, Cmp::lt, 1}},
                                                   {{1, Cmp::ne, 2}, {1, Cmp::lt, 0}}}),
                                 "X");
    }
    if (name == "Betw") {
        // x1<x2<x3 or x3<x2<x1
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::lt, 1}, {2, Cmp::lt, 1}},
                                                   {{0, Cmp::lt, 1}, {1, Cmp::lt, 0}},
                                                   {{1, Cmp::lt, 2}, {2, Cmp::lt, 1}},
                                                   {{1, Cmp::lt, 2}, {1, Cmp::lt, 0}}}),
                                 "Betw");
    }
    if (name == "Cycl") {
        // the three cyclic rotations of x1<x2<x3
        return relation_from_cnf(parse_clauses(3, {{{0, Cmp::ne, 1}},
                                                   {{1, Cmp::ne, 2}},
                                                   {{0, Cmp::ne, 2}},
                                                   {{1, Cmp::lt, 2}, {2, Cmp::lt, 0}},
                                                   {{0, Cmp::lt, 1}, {2, Cmp::lt, 0}},
                                                   {{1, Cmp::lt, 2}, {0, Cmp::lt, 1}}}),
                                 "Cycl");
    }
    if (name == "Sep") {
        // (x<u<y<v) v (y<u<x<v) v (x<v<y<u) v (y<v<x<u) with (x,y,u,v)=(x1..x4)
        auto vars = default_variables(4);
        std::vector<OrderCNF> disjuncts = {
            orbit_description(orbit_of({0, 2, 1, 3}), vars),
            orbit_description(orbit_of({2, 0, 1, 3}), vars),
            orbit_description(orbit_of({0, 2, 3, 1}), vars),
            orbit_description(orbit_of({2, 0, 3, 1}), vars),
        };
        return relation_from_dnf(disjuncts, "Sep");
    }
    if (name == "Lt") return relation_from_cnf(parse_clauses(2, {{{0, Cmp::lt, 1}}}), "Lt");
    if (name == "Leq") return relation_from_cnf(parse_clauses(2, {{{0, Cmp::le, 1}}}), "Leq");
    if (name == "Gt") return relation_from_cnf(parse_clauses(2, {{{0, Cmp::gt, 1}}}), "Gt");
    if (name == "Geq") return relation_from_cnf(parse_clauses(2, {{{0, Cmp::ge, 1}}}), "Geq");
    if (name == "Eq") return relation_from_cnf(parse_clauses(2, {{{0, Cmp::eq, 1}}}), "Eq");
    if (name == "Neq") return relation_from_cnf(parse_clauses(2, {{{0, Cmp::ne, 1}}}), "Neq");
    if (name == "False") {
        OrderCNF bot;
        bot.variables = default_variables(1);
        bot.clauses.push_back({{}, true});
        return relation_from_cnf(bot, "False");
    }
    throw LookupError("builtin: unknown relation name '" + name + "'");
}

std::string canonical_name(const std::string& name) {
    if (name == "<") return "Lt";
    if (name == "<=") return "Leq";
    if (name == ">") return "Gt";
    if (name == ">=") return "Geq";
    if (name == "=") return "Eq";
    if (name == "!=") return "Neq";
    if (name == "FALSE") return "False";
    return name;
}

} // namespace

const TemporalRelation& builtin(const std::string& name) {
    static std::map<std::string, TemporalRelation> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto canon = canonical_name(name);
    auto it = cache.find(canon);
    if (it == cache.end()) {
        it = cache.emplace(canon, make(canon)).first;
    }
    return it->second;
}

bool is_builtin(const std::string& name) {
    try {
        builtin(name);
        return true;
    } catch (const LookupError&) {
        return false;
    }
}

std::vector<std::string> builtin_names() {
    return {"Rmix", "Rmix3", "Rmix4", "Rmix5", "Rmix6", "Rmi",  "RminLeq", "Smi", "Betw", "Cycl",
            "Sep",  "X",     "T3",    "Lt",    "Leq",   "Gt",   "Geq",     "Eq",  "Neq",  "False"};
}

} // namespace tcsp
