#include "tcsp/instance.hpp"

#include <algorithm>

#include "tcsp/builtins.hpp"
#include "tcsp/error.hpp"

namespace tcsp {

Instance::Instance(std::shared_ptr<const TemporalStructure> structure, std::vector<std::string> variables)
    : structure_(std::move(structure)), variables_(std::move(variables)) {
    if (!structure_) throw ContractError("Instance: null structure");
}

int Instance::variable(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    return it == variables_.end() ? -1 : static_cast<int>(it - variables_.begin());
}

int Instance::add_variable(const std::string& name) {
    int existing = variable(name);
    if (existing >= 0) return existing;
    variables_.push_back(name);
    return static_cast<int>(variables_.size()) - 1;
}

void Instance::add(const std::string& rel, const std::vector<int>& vars) {
    AtomicConstraint c{rel, vars};
    const auto& r = resolve(c);
    if (static_cast<int>(vars.size()) != r.arity()) {
        throw ContractError("constraint arity mismatch for '" + rel + "'");
    }
    for (int v : vars) {
        if (v < 0 || v >= num_vars()) throw ContractError("constraint references an unknown variable");
    }
    constraints_.push_back(std::move(c));
}

void Instance::add_by_name(const std::string& rel, const std::vector<std::string>& var_names) {
    std::vector<int> ids;
    ids.reserve(var_names.size());
    for (const auto& n : var_names) ids.push_back(add_variable(n));
    add(rel, ids);
}

const TemporalRelation& Instance::resolve(const AtomicConstraint& c) const {
    if (c.rel == "=") return builtin("Eq");
    if (c.rel == "!=") return builtin("Neq");
    const auto* r = structure_->find(c.rel);
    if (!r) throw LookupError("instance: unknown relation '" + c.rel + "'");
    return *r;
}

int CombinedInstance::variable(const std::string& name) const {
    auto it = std::find(variables.begin(), variables.end(), name);
    return it == variables.end() ? -1 : static_cast<int>(it - variables.begin());
}

int CombinedInstance::add_variable(const std::string& name) {
    int existing = variable(name);
    if (existing >= 0) return existing;
    variables.push_back(name);
    return static_cast<int>(variables.size()) - 1;
}

Instance CombinedInstance::side_instance(int side) const {
    if (side != 1 && side != 2) throw ContractError("side must be 1 or 2");
    Instance inst(side == 1 ? structure1 : structure2, variables);
    for (const auto& c : (side == 1 ? side1 : side2)) inst.add(c.rel, c.vars);
    return inst;
}

} // namespace tcsp
