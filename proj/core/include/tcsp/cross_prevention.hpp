#pragma once

#include "tcsp/pp_formula.hpp"
#include "tcsp/structure.hpp"

namespace tcsp {

// Tests whether phi(x,y,u,v) is a cross prevention formula for A:
//  (1) phi & x=y & u!=v & x!=u & x!=v   satisfiable,
//  (2) phi & x!=y & u=v & x!=u & y!=u   satisfiable,
//  (3) phi & x=y & u=v                  not satisfiable.
// phi must have exactly the four free variables x,y,u,v in that order.
bool check_cross_prevention(const TemporalStructure& a, const PPFormula& phi);

struct CrossPreventionReport {
    bool prevents = false;
    bool cond1 = false;
    bool cond2 = false;
    bool cond3_unsat = false;
};

CrossPreventionReport check_cross_prevention_report(const TemporalStructure& a, const PPFormula& phi);

} // namespace tcsp
