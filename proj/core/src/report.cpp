#include "tcsp/report.hpp"

#include <chrono>

#include "tcsp/builtins.hpp"
#include "tcsp/classify.hpp"
#include "tcsp/cross_prevention.hpp"
#include "tcsp/forms.hpp"
#include "tcsp/nelson_oppen.hpp"
#include "tcsp/ppdef_search.hpp"
#include "tcsp/rmix.hpp"
#include "tcsp/solvers.hpp"

namespace tcsp {

namespace {

using json = nlohmann::ordered_json;

json witness_json(const std::optional<PreservationWitness>& w) {
    if (!w) return nullptr;
    json j;
    j["s"] = w->s.to_string();
    j["t"] = w->t.to_string();
    j["arrangement"] = w->arrangement.to_string();
    j["image"] = w->image.to_string();
    return j;
}

json verdict_json(const Verdict& v) {
    json j;
    j["label"] = outcome_name(v.outcome);
    j["route"] = v.route;
    if (!v.witness_op.empty()) j["witness_op"] = v.witness_op;
    if (!v.matrix.empty()) {
        json rows = json::array();
        for (const auto& row : v.matrix) {
            json r;
            r["op"] = row.op;
            r["relation"] = row.relation;
            r["witness"] = witness_json(row.witness);
            rows.push_back(std::move(r));
        }
        j["matrix"] = std::move(rows);
    }
    if (!v.detail.empty()) j["detail"] = v.detail;
    j["caveat"] = v.caveat;
    return j;
}

json order_json(const Instance& inst, const WeakOrder& w) {
    json j;
    for (int v = 0; v < inst.num_vars(); ++v) {
        j[inst.variables()[static_cast<size_t>(v)]] = w.rank(v);
    }
    return j;
}

json order_json(const std::vector<std::string>& vars, const WeakOrder& w) {
    json j;
    for (size_t v = 0; v < vars.size(); ++v) j[vars[v]] = w.rank(static_cast<int>(v));
    return j;
}

int verdict_exit(const Verdict& v) {
    switch (v.outcome) {
        case Outcome::p: return 0;
        case Outcome::np_complete: return 1;
        case Outcome::needs_manual_analysis: return 2;
    }
    return 2;
}

const std::string& need(const std::map<std::string, std::string>& args, const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) throw ContractError("missing argument '" + key + "'");
    return it->second;
}

std::shared_ptr<TemporalStructure> need_structure(const Manifest& m,
                                                  const std::map<std::string, std::string>& args,
                                                  const std::string& key) {
    auto s = m.find_structure(need(args, key));
    if (!s) throw LookupError("unknown structure '" + need(args, key) + "'");
    return s;
}

// `@Builtin` or `STRUCTURE.REL`.
TemporalRelation resolve_relation(const Manifest& m, const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') return builtin(spec.substr(1));
    auto dot = spec.find('.');
    if (dot == std::string::npos) {
        throw LookupError("relation reference must be '@Builtin' or 'Structure.Rel': " + spec);
    }
    auto s = m.find_structure(spec.substr(0, dot));
    if (!s) throw LookupError("unknown structure in relation reference: " + spec);
    return s->at(spec.substr(dot + 1));
}

} // namespace

RunResult run_command(const std::string& command, const Manifest& manifest,
                      const std::map<std::string, std::string>& args, const RunOptions& options) {
    json report;
    report["tool"] = "tcsp";
    report["version"] = kVersion;
    report["command"] = command;
    report["seed"] = options.seed;
    Config saved = Config::global();
    Config::global() = Config::scaled(options.cap);
    report["caps"] = {{"arity", Config::global().max_arity},
                      {"oracle_vars", Config::global().max_oracle_vars},
                      {"eval_vars", Config::global().max_eval_vars}};

    RunResult out;
    try {
        json r;
        int exit_code = 0;

        if (command == "classify") {
            auto s = need_structure(manifest, args, "structure");
            auto v = classify_temporal(*s);
            r["structure"] = s->name();
            r["verdict"] = verdict_json(v);
            exit_code = verdict_exit(v);
        } else if (command == "classify-comb") {
            auto s1 = need_structure(manifest, args, "structure1");
            auto s2 = need_structure(manifest, args, "structure2");
            auto v = classify_combination(*s1, *s2);
            r["structures"] = {s1->name(), s2->name()};
            r["verdict"] = verdict_json(v);
            exit_code = verdict_exit(v);
        } else if (command == "solve") {
            const auto* decl = manifest.find_instance(need(args, "instance"));
            if (!decl) throw LookupError("unknown instance '" + need(args, "instance") + "'");
            auto inst = manifest.build_instance(*decl);
            auto res = solve_oracle(inst);
            r["instance"] = decl->name;
            r["sat"] = res.sat;
            if (res.witness) r["witness"] = order_json(inst, *res.witness);
            exit_code = res.sat ? 0 : 1;
        } else if (command == "solve-comb") {
            const auto* decl = manifest.find_instance(need(args, "instance"));
            if (!decl) throw LookupError("unknown instance '" + need(args, "instance") + "'");
            auto ci = manifest.build_combined(*decl);
            auto res = solve_combined_oracle(ci);
            r["instance"] = decl->name;
            r["sat"] = res.sat;
            if (res.witness) {
                r["witness1"] = order_json(ci.variables, res.witness->first);
                r["witness2"] = order_json(ci.variables, res.witness->second);
            }
            exit_code = res.sat ? 0 : 1;
        } else if (command == "combine") {
            const auto* decl = manifest.find_instance(need(args, "instance"));
            if (!decl) throw LookupError("unknown instance '" + need(args, "instance") + "'");
            auto ci = manifest.build_combined(*decl);
            auto make_ep = [&](const std::string& key,
                               const TemporalStructure& s) -> EpDefinition {
                auto it = args.find(key);
                if (it == args.end()) {
                    auto derived = derive_ep_definition(s);
                    if (!derived) {
                        throw ContractError("no ep-definition of disequality for side structure '" +
                                            s.name() + "'; pass --" + key);
                    }
                    return *derived;
                }
                EpDefinition ep;
                std::string text = it->second;
                size_t start = 0;
                while (start <= text.size()) {
                    size_t bar = text.find(';', start);
                    std::string piece = text.substr(start, bar == std::string::npos ? bar : bar - start);
                    if (!piece.empty()) {
                        ep.disjuncts.push_back(parse_pp_formula(piece, s, {"x", "y"}));
                    }
                    if (bar == std::string::npos) break;
                    start = bar + 1;
                }
                return ep;
            };
            auto ep1 = make_ep("ep1", *ci.structure1);
            auto ep2 = make_ep("ep2", *ci.structure2);
            bool assume = args.count("assume-independent") > 0;
            if (!assume) {
                for (const auto& [s, tag] :
                     {std::make_pair(ci.structure1, "1"), std::make_pair(ci.structure2, "2")}) {
                    if (has_binary_injective(*s) != Tri::yes) {
                        throw ContractError(
                            "side " + std::string(tag) +
                            " has no certified binary injective polymorphism; independence of "
                            "disequality is not established (pass --assume-independent to override)");
                    }
                }
            }
            auto res = combine_nelson_oppen(ci, ep1, ep2);
            r["instance"] = decl->name;
            r["sat"] = res.sat;
            json merges = json::array();
            for (const auto& m : res.trace.merges) {
                merges.push_back({{"kept", m.kept}, {"merged", m.merged}, {"side", m.side},
                                  {"round", m.round}});
            }
            r["trace"] = {{"solver_calls", res.trace.solver_calls},
                          {"rounds", res.trace.rounds},
                          {"merges", std::move(merges)},
                          {"disjunct_outcomes", res.trace.disjunct_outcomes}};
            exit_code = res.sat ? 0 : 1;
        } else if (command == "poly-check") {
            auto op = OpSpec::parse(need(args, "op"));
            auto rel = resolve_relation(manifest, need(args, "rel"));
            auto res = preserves(op, rel);
            r["op"] = op.to_string();
            r["relation"] = need(args, "rel");
            r["preserved"] = res.preserved;
            r["witness"] = witness_json(res.witness);
            exit_code = res.preserved ? 0 : 1;
        } else if (command == "normal-form") {
            auto form = parse_form(need(args, "form"));
            auto rel = resolve_relation(manifest, need(args, "rel"));
            auto cnf = synthesize_form(rel, form);
            r["relation"] = need(args, "rel");
            r["form"] = form_name(form);
            r["success"] = cnf.has_value();
            if (cnf) r["cnf"] = cnf->to_string();
            exit_code = cnf ? 0 : 1;
        } else if (command == "ppdef-search") {
            auto s = need_structure(manifest, args, "structure");
            auto target = resolve_relation(manifest, need(args, "target"));
            PpdefSearchOptions opts;
            if (args.count("max-bound-vars")) opts.max_bound_vars = std::stoi(args.at("max-bound-vars"));
            if (args.count("max-atoms")) opts.max_atoms = std::stoi(args.at("max-atoms"));
            if (options.time_budget > 0) {
                opts.deadline = std::chrono::steady_clock::now() +
                                std::chrono::milliseconds(static_cast<long>(options.time_budget * 1000));
            }
            auto found = bounded_ppdef_search(*s, target, opts);
            r["structure"] = s->name();
            r["target"] = need(args, "target");
            r["found"] = found.has_value();
            if (found) r["formula"] = found->to_string();
            exit_code = found ? 0 : 1;
        } else if (command == "extract-rmix") {
            auto s = need_structure(manifest, args, "structure");
            PpdefSearchOptions opts;
            if (options.time_budget > 0) {
                opts.deadline = std::chrono::steady_clock::now() +
                                std::chrono::milliseconds(static_cast<long>(options.time_budget * 1000));
            }
            auto res = extract_rmix_definition(*s, opts);
            r["structure"] = s->name();
            r["applicable"] = res.applicable();
            if (res.applicable()) {
                r["route"] = res.extraction->route;
                json steps = json::array();
                for (const auto& step : res.extraction->steps) {
                    steps.push_back({{"name", step.name}, {"formula", step.formula.to_string()}});
                }
                r["steps"] = std::move(steps);
                r["formula"] = res.extraction->steps.back().formula.to_string();
                r["validated"] = true; // extraction throws on a failed validation
                r["conditional"] = res.extraction->conditional();
                r["assumed"] = res.extraction->assumed;
                exit_code = 0;
            } else {
                r["reason"] = res.reason;
                exit_code = 1;
            }
        } else if (command == "cross-prevention") {
            auto s = need_structure(manifest, args, "structure");
            auto phi = parse_pp_formula(need(args, "formula"), *s, {"x", "y", "u", "v"});
            auto rep = check_cross_prevention_report(*s, phi);
            r["structure"] = s->name();
            r["formula"] = phi.to_string();
            r["prevents"] = rep.prevents;
            r["condition1_satisfiable"] = rep.cond1;
            r["condition2_satisfiable"] = rep.cond2;
            r["condition3_unsatisfiable"] = rep.cond3_unsat;
            exit_code = rep.prevents ? 0 : 1;
        } else {
            throw LookupError("unknown command '" + command + "'");
        }

        report["result"] = std::move(r);
        out.exit_code = exit_code;
    } catch (const ParseError& e) {
        report["error"] = {{"module", "cli"}, {"message", e.what()}};
        out.exit_code = 2;
    } catch (const WrongFragment& e) {
        report["error"] = {{"module", "solvers"}, {"message", e.what()}};
        out.exit_code = 2;
    } catch (const CapExceeded& e) {
        report["error"] = {{"module", "config"}, {"message", e.what()}};
        out.exit_code = 2;
    } catch (const LookupError& e) {
        report["error"] = {{"module", "lookup"}, {"message", e.what()}};
        out.exit_code = 2;
    } catch (const Error& e) {
        report["error"] = {{"module", "core"}, {"message", e.what()}};
        out.exit_code = 2;
    }
    Config::global() = saved;
    out.report = std::move(report);
    return out;
}

} // namespace tcsp
