#include "tcsp/cross_prevention.hpp"

#include "tcsp/error.hpp"
#include "tcsp/solvers.hpp"

namespace tcsp {

namespace {

// The formula's atoms plus a set of =/!= side conditions, as an instance
// whose variables are the formula's variables.
bool condition_satisfiable(const TemporalStructure& a, const PPFormula& phi,
                           const std::vector<AtomicConstraint>& conditions) {
    auto holder = std::make_shared<TemporalStructure>(a);
    Instance inst(holder, phi.vars);
    for (const auto& atom : phi.atoms) inst.add(atom.rel, atom.args);
    for (const auto& c : conditions) inst.add(c.rel, c.vars);
    return solve_oracle(inst).sat;
}

} // namespace

CrossPreventionReport check_cross_prevention_report(const TemporalStructure& a, const PPFormula& phi) {
    if (phi.num_free != 4) {
        throw ContractError("cross prevention formula must have exactly four free variables");
    }
    const int x = 0, y = 1, u = 2, v = 3;
    CrossPreventionReport report;
    report.cond1 = condition_satisfiable(
        a, phi, {{"=", {x, y}}, {"!=", {u, v}}, {"!=", {x, u}}, {"!=", {x, v}}});
    report.cond2 = condition_satisfiable(
        a, phi, {{"=", {u, v}}, {"!=", {x, y}}, {"!=", {x, u}}, {"!=", {y, u}}});
    report.cond3_unsat = !condition_satisfiable(a, phi, {{"=", {x, y}}, {"=", {u, v}}});
    report.prevents = report.cond1 && report.cond2 && report.cond3_unsat;
    return report;
}

bool check_cross_prevention(const TemporalStructure& a, const PPFormula& phi) {
    return check_cross_prevention_report(a, phi).prevents;
}

} // namespace tcsp
