#pragma once

#include <functional>
#include <optional>

#include "tcsp/instance.hpp"
#include "tcsp/pp_formula.hpp"
#include "tcsp/solvers.hpp"

namespace tcsp {

// Disjunction of pp-formulas in two free variables jointly defining the
// disequality relation over a structure.
struct EpDefinition {
    std::vector<PPFormula> disjuncts;

    // each disjunct evaluates to a subset of !=, and the union is exactly !=
    bool validate(const TemporalStructure& a, std::string* why = nullptr) const;
};

// "x < y or y < x"; requires a relation of a with the orbit set of <.
EpDefinition ep_from_less(const TemporalStructure& a);
// Best-effort: a strict-order relation gives the two-disjunct definition, a
// disequality relation the one-disjunct one; nullopt otherwise.
std::optional<EpDefinition> derive_ep_definition(const TemporalStructure& a);

struct MergeEvent {
    std::string kept;
    std::string merged;
    int side = 0;
    int round = 0;
};

struct CombineTrace {
    int solver_calls = 0;
    int rounds = 0;
    std::vector<MergeEvent> merges;
    std::vector<std::string> disjunct_outcomes; // one line per tested pair
};

struct CombineResult {
    bool sat = false;
    CombineTrace trace;

    explicit operator bool() const { return sat; }
};

using SideSolver = std::function<SolveResult(const Instance&)>;

// Deciding procedure for the union theory, following the variable
// identification loop: pad both sides so every variable occurs in each, test
// every variable pair against every ep-disjunct per side, merge pairs whose
// disjuncts are all unsatisfiable, iterate to a fixpoint, then decide each
// side. Requires ep-definitions for both sides (refused otherwise);
// independence of != is the caller's responsibility.
CombineResult combine_nelson_oppen(const CombinedInstance& instance, const SideSolver& solver1,
                                   const SideSolver& solver2, const EpDefinition& ep1,
                                   const EpDefinition& ep2);

// Convenience: both sides decided by the exact oracle.
CombineResult combine_nelson_oppen(const CombinedInstance& instance, const EpDefinition& ep1,
                                   const EpDefinition& ep2);

enum class IndependenceStatus { certified_independent, none_found, violated };

struct IndependenceCounterexample {
    Instance instance;
    std::vector<std::pair<std::string, std::string>> pairs; // individually satisfiable disequalities
};

struct IndependenceResult {
    IndependenceStatus status = IndependenceStatus::none_found;
    std::optional<IndependenceCounterexample> counterexample;
    int trials_run = 0;
};

// Randomized search for a violation of independence of != from Th(A): an
// instance phi and pairs such that each phi & x!=y is satisfiable but the
// joint conjunction is not. Structures preserved by ll or dll are certified
// independent without a search (binary injective polymorphism). A none_found
// outcome is not a proof.
IndependenceResult independence_falsifier(std::shared_ptr<const TemporalStructure> a, uint64_t seed,
                                          int trials, int max_vars);

} // namespace tcsp
