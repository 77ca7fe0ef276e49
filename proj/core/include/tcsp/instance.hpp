#pragma once

#include <memory>
#include <string>
#include <vector>

#include "tcsp/structure.hpp"

namespace tcsp {

// One atomic constraint: a relation symbol applied to instance variables.
// The symbol resolves in the instance's structure; "=" always resolves to
// the equality relation. "!=" is additionally accepted for the internal
// checks that need disequalities (cross prevention, independence search);
// CSP inputs proper stay restricted to atomic formulas.
struct AtomicConstraint {
    std::string rel;
    std::vector<int> vars;

    bool operator==(const AtomicConstraint&) const = default;
};

class Instance {
public:
    Instance() = default;
    Instance(std::shared_ptr<const TemporalStructure> structure, std::vector<std::string> variables);

    const TemporalStructure& structure() const { return *structure_; }
    std::shared_ptr<const TemporalStructure> structure_ptr() const { return structure_; }
    const std::vector<std::string>& variables() const { return variables_; }
    int num_vars() const { return static_cast<int>(variables_.size()); }
    const std::vector<AtomicConstraint>& constraints() const { return constraints_; }

    int variable(const std::string& name) const; // -1 if absent
    int add_variable(const std::string& name);
    void add(const std::string& rel, const std::vector<int>& vars);
    void add_by_name(const std::string& rel, const std::vector<std::string>& var_names);

    // The relation a constraint refers to.
    const TemporalRelation& resolve(const AtomicConstraint& c) const;

private:
    std::shared_ptr<const TemporalStructure> structure_;
    std::vector<std::string> variables_;
    std::vector<AtomicConstraint> constraints_;
};

// Conjunction of side-tagged atomic constraints over two structures with
// disjoint signatures; every variable may appear on either side.
struct CombinedInstance {
    std::shared_ptr<const TemporalStructure> structure1;
    std::shared_ptr<const TemporalStructure> structure2;
    std::vector<std::string> variables;
    std::vector<AtomicConstraint> side1;
    std::vector<AtomicConstraint> side2;

    int variable(const std::string& name) const;
    int add_variable(const std::string& name);

    // The side as a standalone instance over its structure.
    Instance side_instance(int side) const;
};

} // namespace tcsp
