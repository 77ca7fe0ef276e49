#pragma once

#include <string>
#include <vector>

#include "tcsp/relation.hpp"

namespace tcsp {

// A named temporal structure: a finite list of named relations over the
// shared abstract dense-order domain.
class TemporalStructure {
public:
    TemporalStructure() = default;
    explicit TemporalStructure(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }

    void add(std::string rel_name, TemporalRelation rel);
    const TemporalRelation* find(const std::string& rel_name) const;
    const TemporalRelation& at(const std::string& rel_name) const;

    const std::vector<TemporalRelation>& relations() const { return relations_; }
    size_t size() const { return relations_.size(); }

    // Convenience: builds (Q; names...) from builtin relation names.
    static TemporalStructure of_builtins(std::string name, const std::vector<std::string>& names);

private:
    std::string name_;
    std::vector<TemporalRelation> relations_; // relation name stored on the relation
};

} // namespace tcsp
