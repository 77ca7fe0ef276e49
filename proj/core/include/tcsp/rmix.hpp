#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcsp/pp_formula.hpp"
#include "tcsp/ppdef_search.hpp"
#include "tcsp/relation.hpp"
#include "tcsp/structure.hpp"

namespace tcsp {

// The n-ary generalization of Rmix: min of coordinates 3..n at or above
// min of the first two forces the first two equal. n >= 3.
TemporalRelation rmix_n(int n);

// The inductive pp-definition of rmix_n over (Q;<,Rmix), fully unfolded to
// Rmix atoms: rmix_n(x1..xn) = exists h (rmix_{n-1}(x1,h,x3..x_{n-1}) and
// Rmix(h,x2,xn)). For n = 3 this degenerates to the single Rmix atom.
PPFormula rmix_n_inductive(int n);

// One stage of a layered pp-definition; the formula is over the input
// structure extended by all earlier steps' relations.
struct DefinitionStep {
    std::string name;
    PPFormula formula;

    std::string to_string() const { return name + "(...) := " + formula.to_string(); }
};

struct RmixExtraction {
    std::string route; // "mix", "mi", "min", "mx" or "t3"
    std::vector<DefinitionStep> steps; // the last step defines Rmix
    std::vector<std::string> assumed;  // auxiliaries used without a found definition

    bool conditional() const { return !assumed.empty(); }
};

struct ExtractOutcome {
    std::optional<RmixExtraction> extraction; // nullopt: preconditions failed
    std::string reason;                       // why inapplicable

    bool applicable() const { return extraction.has_value(); }
};

// Emits a pp-definition of Rmix over A, following the definability routes:
// mix-preserved structures use the clause-pair construction on a relation
// not preserved by ll; mi uses the weak-literal clause construction over
// A plus a definition of <=; min goes through RminLeq; mx through X; the
// remaining case goes through T3. Applicable when every relation of A
// admits a pp-form definition and A is not preserved by ll. Every emitted
// step is validated by evaluation; Rmix inequality raises Error.
ExtractOutcome extract_rmix_definition(const TemporalStructure& a,
                                       const PpdefSearchOptions& search = {});

} // namespace tcsp
