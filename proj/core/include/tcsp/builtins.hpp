#pragma once

#include <string>
#include <vector>

#include "tcsp/relation.hpp"

namespace tcsp {

// Relation library. Canonical names:
//   Rmix, Rmix3..Rmix6, Rmi, RminLeq, Smi, Betw, Cycl, Sep, X, T3,
//   Lt, Leq, Eq, Neq, False
// Symbol aliases "<", "<=", "=", "!=", ">", ">=" resolve to Lt/Leq/Eq/Neq/Gt/Geq.
// Unknown names raise LookupError. Results are cached.
const TemporalRelation& builtin(const std::string& name);

bool is_builtin(const std::string& name);

std::vector<std::string> builtin_names();

} // namespace tcsp
