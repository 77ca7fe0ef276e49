#pragma once

#include <optional>

#include "tcsp/instance.hpp"
#include "tcsp/weak_order.hpp"

namespace tcsp {

struct SolveResult {
    bool sat = false;
    std::optional<WeakOrder> witness; // weak order on the instance variables

    explicit operator bool() const { return sat; }
};

// Exact decision by enumerating all weak orders on the variables; returns
// the first satisfying order in canonical enumeration order. The variable
// count is capped (resource error beyond it).
SolveResult solve_oracle(const Instance& instance);

struct CombinedSolveResult {
    bool sat = false;
    std::optional<std::pair<WeakOrder, WeakOrder>> witness; // matching kernels

    explicit operator bool() const { return sat; }
};

// Satisfiable iff there are weak orders o1, o2 on the variables with
// identical equality kernels such that o1 satisfies side 1 and o2 side 2.
// Enumerates set partitions and per-side block orders.
CombinedSolveResult solve_combined_oracle(const CombinedInstance& instance);

// Polynomial solver for instances whose relations all admit min-form
// definitions; throws WrongFragment otherwise. Level-by-level greatest
// fixpoint; agrees with solve_oracle on its precondition domain.
SolveResult solve_min_closed(const Instance& instance);

} // namespace tcsp
