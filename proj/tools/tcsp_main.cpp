#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "tcsp/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open manifest file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"temporal constraint language toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string manifest_path;
    std::string out_path;
    tcsp::RunOptions options;
    app.add_option("-m,--manifest", manifest_path, "manifest file (structure/instance DSL)");
    app.add_option("-o,--out", out_path, "write the report to a file instead of stdout");
    app.add_option("--seed", options.seed, "random seed embedded in reports");
    app.add_option("--cap", options.cap, "base arity cap (oracle/eval caps derive from it)");
    app.add_option("--time-budget", options.time_budget, "soft time budget in seconds for searches");

    std::map<std::string, std::string> args;
    std::string structure, structure2, instance, op, rel, form, target, formula, ep1, ep2;
    std::string max_bound_vars, max_atoms;
    bool assume_independent = false;

    auto* classify = app.add_subcommand("classify", "P / NP-complete verdict for one structure");
    classify->add_option("-s,--structure", structure, "structure name")->required();

    auto* classify_comb =
        app.add_subcommand("classify-comb", "verdict for the combination of two structures");
    classify_comb->add_option("--s1", structure, "first structure")->required();
    classify_comb->add_option("--s2", structure2, "second structure")->required();

    auto* solve = app.add_subcommand("solve", "decide a single-structure instance");
    solve->add_option("-i,--instance", instance, "instance name")->required();

    auto* solve_comb = app.add_subcommand("solve-comb", "decide a combined instance exactly");
    solve_comb->add_option("-i,--instance", instance, "instance name")->required();

    auto* combine =
        app.add_subcommand("combine", "decide a combined instance by variable identification");
    combine->add_option("-i,--instance", instance, "instance name")->required();
    combine->add_option("--ep1", ep1, "side-1 disequality disjuncts, ';'-separated pp formulas");
    combine->add_option("--ep2", ep2, "side-2 disequality disjuncts");
    combine->add_flag("--assume-independent", assume_independent,
                      "skip the binary-injectivity certification");

    auto* poly = app.add_subcommand("poly-check", "does an operation preserve a relation?");
    poly->add_option("--op", op, "min|mi|mx|mix|ll|pp|lex or a dual (dual-min, dll, ...)")->required();
    poly->add_option("--rel", rel, "@Builtin or Structure.Rel")->required();

    auto* nf = app.add_subcommand("normal-form", "synthesize a syntactic normal form");
    nf->add_option("--form", form, "pp|min|mi|mix")->required();
    nf->add_option("--rel", rel, "@Builtin or Structure.Rel")->required();

    auto* search = app.add_subcommand("ppdef-search", "bounded pp-definability search");
    search->add_option("-s,--structure", structure, "structure name")->required();
    search->add_option("--target", target, "@Builtin or Structure.Rel")->required();
    search->add_option("--max-bound-vars", max_bound_vars, "bound variable budget (default 2)");
    search->add_option("--max-atoms", max_atoms, "atom budget (default 4)");

    auto* extract = app.add_subcommand("extract-rmix", "constructive pp-definition of Rmix");
    extract->add_option("-s,--structure", structure, "structure name")->required();

    auto* cross = app.add_subcommand("cross-prevention", "check a cross prevention formula");
    cross->add_option("-s,--structure", structure, "structure name")->required();
    cross->add_option("--formula", formula, "pp formula on free variables x,y,u,v")->required();

    CLI11_PARSE(app, argc, argv);

    tcsp::Manifest manifest;
    std::string command = app.get_subcommands().front()->get_name();
    try {
        if (!manifest_path.empty()) {
            manifest = tcsp::parse_manifest(read_file(manifest_path));
        }
    } catch (const std::exception& e) {
        nlohmann::ordered_json report;
        report["tool"] = "tcsp";
        report["version"] = tcsp::kVersion;
        report["command"] = command;
        report["error"] = {{"module", "cli"}, {"message", e.what()}};
        std::cout << report.dump(2) << "\n";
        return 2;
    }

    if (!structure.empty()) args["structure"] = structure;
    if (command == "classify-comb") {
        args["structure1"] = structure;
        args["structure2"] = structure2;
    }
    if (!instance.empty()) args["instance"] = instance;
    if (!op.empty()) args["op"] = op;
    if (!rel.empty()) args["rel"] = rel;
    if (!form.empty()) args["form"] = form;
    if (!target.empty()) args["target"] = target;
    if (!formula.empty()) args["formula"] = formula;
    if (!ep1.empty()) args["ep1"] = ep1;
    if (!ep2.empty()) args["ep2"] = ep2;
    if (!max_bound_vars.empty()) args["max-bound-vars"] = max_bound_vars;
    if (!max_atoms.empty()) args["max-atoms"] = max_atoms;
    if (assume_independent) args["assume-independent"] = "1";

    auto result = tcsp::run_command(command, manifest, args, options);
    std::string text = result.report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        out << text;
    }
    return result.exit_code;
}
