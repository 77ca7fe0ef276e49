#include "tcsp/manifest.hpp"

#include <algorithm>
#include <cctype>

#include "tcsp/builtins.hpp"

namespace tcsp {

namespace {

struct Token {
    enum Kind { ident, number, symbol, end };
    Kind kind;
    std::string text;
    int line;
    int column;
};

struct Lexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1;
    int column = 1;
    Token current;

    explicit Lexer(const std::string& s) : src(s) { advance(); }

    void bump(char c) {
        if (c == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    void skip_space() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == '#') {
                while (pos < src.size() && src[pos] != '\n') bump(src[pos]);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                bump(c);
            } else {
                break;
            }
        }
    }

    void advance() {
        skip_space();
        current.line = line;
        current.column = column;
        if (pos >= src.size()) {
            current = {Token::end, "", line, column};
            return;
        }
        char c = src[pos];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string text;
            while (pos < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_')) {
                text += src[pos];
                bump(src[pos]);
            }
            current = {Token::ident, text, current.line, current.column};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string text;
            while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
                text += src[pos];
                bump(src[pos]);
            }
            current = {Token::number, text, current.line, current.column};
            return;
        }
        // multi-character operators first
        for (const char* op : {":=", "<=", ">=", "!="}) {
            if (src.compare(pos, 2, op) == 0) {
                bump(src[pos]);
                bump(src[pos]);
                current = {Token::symbol, op, current.line, current.column};
                return;
            }
        }
        std::string text(1, c);
        bump(c);
        current = {Token::symbol, text, current.line, current.column};
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, current.line, current.column);
    }

    bool is_symbol(const std::string& s) const {
        return current.kind == Token::symbol && current.text == s;
    }
    bool is_ident(const std::string& s) const {
        return current.kind == Token::ident && current.text == s;
    }

    void expect_symbol(const std::string& s) {
        if (!is_symbol(s)) fail("expected '" + s + "'");
        advance();
    }

    std::string expect_ident(const std::string& what) {
        if (current.kind != Token::ident) fail("expected " + what);
        std::string t = current.text;
        advance();
        return t;
    }

    int expect_number(const std::string& what) {
        if (current.kind != Token::number) fail("expected " + what);
        int v = std::stoi(current.text);
        advance();
        return v;
    }
};

std::optional<Cmp> as_cmp(const std::string& s) {
    if (s == "<") return Cmp::lt;
    if (s == "<=") return Cmp::le;
    if (s == "=") return Cmp::eq;
    if (s == "!=") return Cmp::ne;
    if (s == ">") return Cmp::gt;
    if (s == ">=") return Cmp::ge;
    return std::nullopt;
}

int positional_var(Lexer& lex, int arity) {
    if (lex.current.kind != Token::ident) lex.fail("expected a variable x1..x" + std::to_string(arity));
    const std::string& t = lex.current.text;
    if (t.size() < 2 || t[0] != 'x') lex.fail("expected a variable x1..x" + std::to_string(arity));
    for (size_t i = 1; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) {
            lex.fail("expected a variable x1..x" + std::to_string(arity));
        }
    }
    int idx = std::stoi(t.substr(1));
    if (idx < 1 || idx > arity) {
        lex.fail("variable " + t + " is out of range for arity " + std::to_string(arity));
    }
    lex.advance();
    return idx - 1;
}

Literal parse_literal(Lexer& lex, int arity) {
    Literal lit;
    lit.lhs = positional_var(lex, arity);
    auto cmp = lex.current.kind == Token::symbol ? as_cmp(lex.current.text) : std::nullopt;
    if (!cmp) lex.fail("expected a comparison operator");
    lit.cmp = *cmp;
    lex.advance();
    lit.rhs = positional_var(lex, arity);
    return lit;
}

Clause parse_clause(Lexer& lex, int arity) {
    Clause clause;
    if (lex.is_ident("false")) {
        lex.advance();
        clause.is_false = true;
        return clause;
    }
    bool paren = lex.is_symbol("(");
    if (paren) lex.advance();
    clause.literals.push_back(parse_literal(lex, arity));
    while (lex.is_symbol("|")) {
        lex.advance();
        clause.literals.push_back(parse_literal(lex, arity));
    }
    if (paren) lex.expect_symbol(")");
    return clause;
}

OrderCNF parse_cnf(Lexer& lex, int arity) {
    OrderCNF cnf;
    cnf.variables = default_variables(arity);
    cnf.clauses.push_back(parse_clause(lex, arity));
    while (lex.is_symbol("&")) {
        lex.advance();
        cnf.clauses.push_back(parse_clause(lex, arity));
    }
    return cnf;
}

StructureDecl parse_structure(Lexer& lex) {
    StructureDecl decl;
    decl.name = lex.expect_ident("structure name");
    lex.expect_symbol("{");
    while (!lex.is_symbol("}")) {
        if (!lex.is_ident("rel")) lex.fail("expected 'rel' or '}'");
        lex.advance();
        RelDecl rel;
        rel.name = lex.expect_ident("relation name");
        std::optional<int> arity;
        if (lex.is_symbol("/")) {
            lex.advance();
            arity = lex.expect_number("relation arity");
            if (*arity < 1) lex.fail("arity must be positive");
        }
        lex.expect_symbol(":=");
        if (lex.is_symbol("@")) {
            lex.advance();
            std::string b = lex.expect_ident("builtin relation name");
            if (!is_builtin(b)) {
                throw ParseError("unknown builtin relation '" + b + "'", lex.current.line,
                                 lex.current.column);
            }
            if (arity && builtin(b).arity() != *arity) lex.fail("arity mismatch for builtin " + b);
            rel.source = b;
        } else {
            if (!arity) lex.fail("a CNF relation needs an explicit arity (rel R/k := ...)");
            rel.source = parse_cnf(lex, *arity);
        }
        lex.expect_symbol(";");
        decl.relations.push_back(std::move(rel));
    }
    lex.advance(); // '}'
    return decl;
}

InstanceDecl parse_instance(Lexer& lex) {
    InstanceDecl decl;
    decl.name = lex.expect_ident("instance name");
    if (!lex.is_ident("over")) lex.fail("expected 'over'");
    lex.advance();
    decl.structures.push_back(lex.expect_ident("structure name"));
    if (lex.is_symbol(",")) {
        lex.advance();
        decl.structures.push_back(lex.expect_ident("structure name"));
    }
    lex.expect_symbol("{");
    auto var_id = [&](const std::string& name) {
        if (std::find(decl.variables.begin(), decl.variables.end(), name) == decl.variables.end()) {
            decl.variables.push_back(name);
        }
        return name;
    };
    while (!lex.is_symbol("}")) {
        std::string first = lex.expect_ident("constraint");
        if (lex.is_symbol(".")) {
            lex.advance();
            std::string rel = lex.expect_ident("relation name");
            auto it = std::find(decl.structures.begin(), decl.structures.end(), first);
            if (it == decl.structures.end()) {
                lex.fail("'" + first + "' is not a structure of this instance");
            }
            int side = static_cast<int>(it - decl.structures.begin()) + 1;
            lex.expect_symbol("(");
            std::vector<std::string> vars;
            vars.push_back(var_id(lex.expect_ident("variable")));
            while (lex.is_symbol(",")) {
                lex.advance();
                vars.push_back(var_id(lex.expect_ident("variable")));
            }
            lex.expect_symbol(")");
            decl.constraints.push_back({side, rel, std::move(vars)});
        } else if (lex.is_symbol("=")) {
            lex.advance();
            std::string rhs = lex.expect_ident("variable");
            decl.constraints.push_back({0, "=", {var_id(first), var_id(rhs)}});
        } else {
            lex.fail("expected '.' or '=' in a constraint");
        }
        lex.expect_symbol(";");
    }
    lex.advance();
    return decl;
}

} // namespace

std::shared_ptr<TemporalStructure> Manifest::find_structure(const std::string& name) const {
    for (const auto& s : structures) {
        if (s->name() == name) return s;
    }
    return nullptr;
}

const InstanceDecl* Manifest::find_instance(const std::string& name) const {
    for (const auto& i : instances) {
        if (i.name == name) return &i;
    }
    return nullptr;
}

Instance Manifest::build_instance(const InstanceDecl& decl) const {
    if (decl.combined()) throw ContractError("instance '" + decl.name + "' is a combined instance");
    auto s = find_structure(decl.structures[0]);
    Instance inst(s, decl.variables);
    for (const auto& c : decl.constraints) inst.add_by_name(c.rel, c.vars);
    return inst;
}

CombinedInstance Manifest::build_combined(const InstanceDecl& decl) const {
    if (!decl.combined()) throw ContractError("instance '" + decl.name + "' is not a combined instance");
    CombinedInstance ci;
    ci.structure1 = find_structure(decl.structures[0]);
    ci.structure2 = find_structure(decl.structures[1]);
    ci.variables = decl.variables;
    for (const auto& c : decl.constraints) {
        std::vector<int> vars;
        for (const auto& v : c.vars) vars.push_back(ci.variable(v));
        if (c.side == 1) {
            ci.side1.push_back({c.rel, vars});
        } else if (c.side == 2) {
            ci.side2.push_back({c.rel, vars});
        } else {
            // shared equality: the kernels must match, so assert it on both sides
            ci.side1.push_back({"=", vars});
            ci.side2.push_back({"=", vars});
        }
    }
    return ci;
}

Manifest parse_manifest(const std::string& text) {
    Manifest m;
    Lexer lex(text);
    while (lex.current.kind != Token::end) {
        if (lex.is_ident("structure")) {
            lex.advance();
            auto decl = parse_structure(lex);
            if (m.find_structure(decl.name)) {
                throw ParseError("duplicate structure '" + decl.name + "'", lex.current.line,
                                 lex.current.column);
            }
            auto s = std::make_shared<TemporalStructure>(decl.name);
            for (const auto& rel : decl.relations) {
                if (s->find(rel.name)) {
                    throw ParseError("duplicate relation '" + rel.name + "' in structure '" +
                                         decl.name + "'",
                                     lex.current.line, lex.current.column);
                }
                if (std::holds_alternative<std::string>(rel.source)) {
                    s->add(rel.name, builtin(std::get<std::string>(rel.source)));
                } else {
                    s->add(rel.name, relation_from_cnf(std::get<OrderCNF>(rel.source)));
                }
            }
            m.structure_decls.push_back(std::move(decl));
            m.structures.push_back(std::move(s));
        } else if (lex.is_ident("instance")) {
            lex.advance();
            auto decl = parse_instance(lex);
            if (m.find_instance(decl.name)) {
                throw ParseError("duplicate instance '" + decl.name + "'", lex.current.line,
                                 lex.current.column);
            }
            for (const auto& sn : decl.structures) {
                if (!m.find_structure(sn)) {
                    throw ParseError("instance '" + decl.name + "' references unknown structure '" +
                                         sn + "'",
                                     lex.current.line, lex.current.column);
                }
            }
            // resolve constraint arities now for early diagnostics
            for (const auto& c : decl.constraints) {
                if (c.rel == "=") continue;
                int side = c.side;
                auto s = m.find_structure(decl.structures[static_cast<size_t>(side - 1)]);
                const auto* rel = s->find(c.rel);
                if (!rel) {
                    throw ParseError("unknown relation '" + c.rel + "' in structure '" + s->name() +
                                         "'",
                                     lex.current.line, lex.current.column);
                }
                if (rel->arity() != static_cast<int>(c.vars.size())) {
                    throw ParseError("arity mismatch for '" + c.rel + "'", lex.current.line,
                                     lex.current.column);
                }
            }
            m.instances.push_back(std::move(decl));
        } else {
            lex.fail("expected 'structure' or 'instance'");
        }
    }
    return m;
}

std::string serialize_manifest(const Manifest& manifest) {
    std::string out;
    for (const auto& decl : manifest.structure_decls) {
        out += "structure " + decl.name + " {\n";
        for (const auto& rel : decl.relations) {
            if (std::holds_alternative<std::string>(rel.source)) {
                out += "  rel " + rel.name + " := @" + std::get<std::string>(rel.source) + ";\n";
            } else {
                const auto& cnf = std::get<OrderCNF>(rel.source);
                out += "  rel " + rel.name + "/" + std::to_string(cnf.arity()) + " := " +
                       cnf.to_string() + ";\n";
            }
        }
        out += "}\n";
    }
    for (const auto& inst : manifest.instances) {
        out += "instance " + inst.name + " over " + inst.structures[0];
        if (inst.combined()) out += "," + inst.structures[1];
        out += " {\n";
        for (const auto& c : inst.constraints) {
            if (c.side == 0) {
                out += "  " + c.vars[0] + " = " + c.vars[1] + ";\n";
            } else {
                out += "  " + inst.structures[static_cast<size_t>(c.side - 1)] + "." + c.rel + "(";
                for (size_t i = 0; i < c.vars.size(); ++i) {
                    if (i) out += ",";
                    out += c.vars[i];
                }
                out += ");\n";
            }
        }
        out += "}\n";
    }
    return out;
}

PPFormula parse_pp_formula(const std::string& text, const TemporalStructure& a,
                           const std::vector<std::string>& free_vars) {
    Lexer lex(text);
    PPFormula f;
    f.vars = free_vars;
    f.num_free = static_cast<int>(free_vars.size());
    if (lex.is_ident("exists")) {
        lex.advance();
        while (lex.current.kind == Token::ident) {
            f.vars.push_back(lex.current.text);
            lex.advance();
        }
        lex.expect_symbol(".");
    }
    auto var_id = [&](const std::string& name, Lexer& l) {
        auto it = std::find(f.vars.begin(), f.vars.end(), name);
        if (it == f.vars.end()) {
            l.fail("variable '" + name + "' is neither free nor bound by exists");
        }
        return static_cast<int>(it - f.vars.begin());
    };
    auto order_atom = [&](int lhs, Cmp cmp, int rhs, Lexer& l) -> PPAtom {
        if (cmp == Cmp::eq) return {"=", {lhs, rhs}};
        // resolve against the structure's relations by orbit set
        auto want = [&](const char* builtin_name, int a1, int a2) -> PPAtom {
            for (const auto& rel : a.relations()) {
                if (rel.same_orbits(builtin(builtin_name))) return {rel.name(), {a1, a2}};
            }
            l.fail(std::string("the structure has no relation realizing '") + builtin_name + "'");
        };
        switch (cmp) {
            case Cmp::lt: return want("Lt", lhs, rhs);
            case Cmp::gt: return want("Lt", rhs, lhs);
            case Cmp::le: return want("Leq", lhs, rhs);
            case Cmp::ge: return want("Leq", rhs, lhs);
            case Cmp::ne: return want("Neq", lhs, rhs);
            default: l.fail("unsupported operator");
        }
    };
    auto parse_atom = [&]() {
        std::string first = lex.expect_ident("atom");
        if (lex.is_symbol("(")) {
            lex.advance();
            std::vector<int> args;
            args.push_back(var_id(lex.expect_ident("variable"), lex));
            while (lex.is_symbol(",")) {
                lex.advance();
                args.push_back(var_id(lex.expect_ident("variable"), lex));
            }
            lex.expect_symbol(")");
            if (!a.find(first)) lex.fail("unknown relation '" + first + "'");
            f.atoms.push_back({first, std::move(args)});
            return;
        }
        auto cmp = lex.current.kind == Token::symbol ? as_cmp(lex.current.text) : std::nullopt;
        if (!cmp) lex.fail("expected '(' or a comparison operator");
        lex.advance();
        int lhs = var_id(first, lex);
        int rhs = var_id(lex.expect_ident("variable"), lex);
        f.atoms.push_back(order_atom(lhs, *cmp, rhs, lex));
    };
    parse_atom();
    while (lex.is_symbol("&")) {
        lex.advance();
        parse_atom();
    }
    if (lex.current.kind != Token::end) lex.fail("unexpected trailing input");
    return f;
}

} // namespace tcsp
