#pragma once

#include <string>
#include <vector>

#include "tcsp/relation.hpp"
#include "tcsp/structure.hpp"

namespace tcsp {

// One conjunct of a primitive positive formula: a relation symbol applied to
// variables (by index into the formula's variable list), or an equality atom
// written with the reserved symbol "=".
struct PPAtom {
    std::string rel;
    std::vector<int> args;

    bool operator==(const PPAtom&) const = default;
};

// Existentially quantified conjunction of atoms. The first num_free entries
// of vars are the free variables, in order; the rest are bound.
struct PPFormula {
    std::vector<std::string> vars;
    int num_free = 0;
    std::vector<PPAtom> atoms;

    int num_bound() const { return static_cast<int>(vars.size()) - num_free; }
    std::string to_string() const;

    // Atoms of `other` spliced in with its free variables mapped to `args`
    // (indices into this formula's variables) and bound variables freshened.
    void inline_formula(const PPFormula& other, const std::vector<int>& args);
};

// Orbit set over the free variables: a free-orbit is included iff some weak
// order on all variables extends it and satisfies every conjunct. Unknown
// relation symbols raise LookupError; the variable total is capped.
TemporalRelation eval_pp(const PPFormula& formula, const TemporalStructure& a);

} // namespace tcsp
