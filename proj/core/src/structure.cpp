#include "tcsp/structure.hpp"

#include "tcsp/builtins.hpp"
#include "tcsp/error.hpp"

namespace tcsp {

void TemporalStructure::add(std::string rel_name, TemporalRelation rel) {
    if (find(rel_name) != nullptr) {
        throw ContractError("structure " + name_ + ": duplicate relation '" + rel_name + "'");
    }
    rel.set_name(std::move(rel_name));
    relations_.push_back(std::move(rel));
}

const TemporalRelation* TemporalStructure::find(const std::string& rel_name) const {
    for (const auto& r : relations_) {
        if (r.name() == rel_name) return &r;
    }
    return nullptr;
}

const TemporalRelation& TemporalStructure::at(const std::string& rel_name) const {
    const auto* r = find(rel_name);
    if (!r) throw LookupError("structure " + name_ + ": unknown relation '" + rel_name + "'");
    return *r;
}

TemporalStructure TemporalStructure::of_builtins(std::string name, const std::vector<std::string>& names) {
    TemporalStructure s(std::move(name));
    for (const auto& n : names) {
        const auto& rel = builtin(n);
        s.add(rel.name(), rel);
    }
    return s;
}

} // namespace tcsp
