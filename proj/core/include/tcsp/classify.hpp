#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcsp/preserve.hpp"
#include "tcsp/structure.hpp"

namespace tcsp {

enum class Outcome { p, np_complete, needs_manual_analysis };

const char* outcome_name(Outcome o);

// One row of the failed-operation matrix backing an NP-complete verdict.
struct FailedOp {
    std::string op;       // "min".."dll", or "constant"
    std::string relation; // relation the operation fails on
    std::optional<PreservationWitness> witness;
};

struct Verdict {
    Outcome outcome = Outcome::needs_manual_analysis;
    std::string route;      // "constant"/"common-op" for single structures;
                            // "all-perms-union", "both-constant",
                            // "both-bin-inj", "single-side-hard", "no-route"
    std::string witness_op; // preserving operation for P verdicts
    std::vector<FailedOp> matrix;
    std::string detail;
    std::string caveat = "conditional on P != NP";
};

// The tractability dichotomy for a single temporal structure: P iff the
// structure has a constant polymorphism or is preserved by one of min, mi,
// mx, ll or a dual; NP-complete otherwise, with the full failed-operation
// matrix as the witness.
Verdict classify_temporal(const TemporalStructure& a);

enum class Tri { yes, no, unknown };

// Binary injective polymorphism, decided through the ll/dll proxy: yes if
// preserved by ll or dll; no if preserved by min/mi/mx or a dual but by
// neither ll nor dll; unknown otherwise.
Tri has_binary_injective(const TemporalStructure& a);

// Disjoint-signature union of the two structures, relations renamed
// "<name>.<rel>".
TemporalStructure union_structure(const TemporalStructure& a1, const TemporalStructure& a2);

// Complexity of the combined constraint problem:
//  (i)   a side preserved by all permutations: classify the union structure;
//  (ii)  both sides with constant polymorphisms: P;
//  (iii) both sides binary injective and tractable: P;
//  (iv)  otherwise NP-complete.
// An unknown binary-injective answer in a decisive position yields a
// needs_manual_analysis outcome, never a guessed verdict.
Verdict classify_combination(const TemporalStructure& a1, const TemporalStructure& a2);

} // namespace tcsp
