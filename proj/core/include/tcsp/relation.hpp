#pragma once

#include <set>
#include <string>
#include <vector>

#include "tcsp/config.hpp"
#include "tcsp/weak_order.hpp"

namespace tcsp {

// A temporal relation stored extensionally: its arity and the set of orbits
// of tuples it contains. The empty set is a valid relation.
class TemporalRelation {
public:
    TemporalRelation() = default;
    TemporalRelation(int arity, std::vector<WeakOrder> orbits, std::string name = "");

    static TemporalRelation empty(int arity, std::string name = "");

    int arity() const { return arity_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const std::vector<WeakOrder>& orbits() const { return orbits_; }
    size_t orbit_count() const { return orbits_.size(); }
    bool is_empty() const { return orbits_.empty(); }

    bool contains(const WeakOrder& w) const;
    bool contains_key(uint64_t key) const;

    TemporalRelation dual() const;

    bool same_orbits(const TemporalRelation& o) const {
        return arity_ == o.arity_ && keys_ == o.keys_;
    }

    std::string to_string() const;

private:
    int arity_ = 0;
    std::vector<WeakOrder> orbits_; // sorted by key, unique
    std::vector<uint64_t> keys_;    // parallel to orbits_
    std::string name_;
};

// Set of min-tuples of all orbits; requires a non-empty relation.
std::vector<MinTuple> chi(const TemporalRelation& r);

// chi plus the all-zero vector.
std::vector<MinTuple> chi0(const TemporalRelation& r);

} // namespace tcsp
