#pragma once

#include <chrono>
#include <optional>

#include "tcsp/pp_formula.hpp"

namespace tcsp {

struct PpdefSearchOptions {
    int max_bound_vars = 2;
    int max_atoms = 4;
    // soft deadline; expiry makes the search give up with not-found
    std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Sound, incomplete witness search: returns a formula phi with
// eval_pp(phi, a) == target, or nullopt. A nullopt does NOT certify
// non-definability. The search is deterministic: atom candidates are tried
// in signature-then-tuple order, smallest formulas first.
std::optional<PPFormula> bounded_ppdef_search(const TemporalStructure& a, const TemporalRelation& target,
                                              const PpdefSearchOptions& options = {});

} // namespace tcsp
