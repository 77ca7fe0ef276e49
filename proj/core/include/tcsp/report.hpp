#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "json.hpp"

#include "tcsp/manifest.hpp"

namespace tcsp {

// Options shared by every command.
struct RunOptions {
    uint64_t seed = 0;
    int cap = 6;            // base arity cap; oracle/eval caps derive from it
    double time_budget = 0; // seconds; 0 = unlimited
};

struct RunResult {
    nlohmann::ordered_json report;
    int exit_code = 0; // 0 success / 1 unsat-or-negative / 2 error
};

// Commands: classify, classify-comb, solve, solve-comb, combine, poly-check,
// normal-form, ppdef-search, extract-rmix, cross-prevention. Arguments are
// named strings (structure=, instance=, op=, rel=, form=, target=, formula=,
// ep1=, ep2=, max-bound-vars=, max-atoms=, assume-independent=). Reports are
// byte-stable for a fixed seed and tool version; errors are reported inside
// the JSON with exit code 2.
RunResult run_command(const std::string& command, const Manifest& manifest,
                      const std::map<std::string, std::string>& args, const RunOptions& options);

} // namespace tcsp
