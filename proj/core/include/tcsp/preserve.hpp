#pragma once

#include <optional>

#include "tcsp/ops.hpp"
#include "tcsp/relation.hpp"
#include "tcsp/structure.hpp"

namespace tcsp {

// A counterexample to preservation: an orbit pair and an arrangement whose
// componentwise image leaves the relation.
struct PreservationWitness {
    WeakOrder s;
    WeakOrder t;
    Interleaving arrangement;
    WeakOrder image;
    std::string relation; // set by the structure-level check

    std::string to_string() const;
};

struct PreservationResult {
    bool preserved = false;
    std::optional<PreservationWitness> witness;

    explicit operator bool() const { return preserved; }
};

// Exact preservation test: true iff for every ordered orbit pair of R and
// every interleaving (including every marker placement for ll/pp and duals)
// the image orbit stays in R. The empty relation is preserved by everything.
PreservationResult preserves(OpSpec op, const TemporalRelation& R);

// Structure-level test; the witness carries the failing relation's name.
PreservationResult preserves(OpSpec op, const TemporalStructure& A);

// True iff the orbit set is closed under replacing an orbit by any weak
// order with the same equality kernel.
bool preserved_by_all_permutations(const TemporalRelation& R);
bool preserved_by_all_permutations(const TemporalStructure& A);

// True iff every non-empty relation contains the all-equal orbit.
bool has_constant_polymorphism(const TemporalStructure& A);

// Composition spot check: mix(mix(x,y),3y) realizes mi on the {0..3}^2 grid.
bool mi_from_mix_grid_check();

} // namespace tcsp
