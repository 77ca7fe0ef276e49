#include "tcsp/relation.hpp"

#include <algorithm>

#include "tcsp/error.hpp"

namespace tcsp {

TemporalRelation::TemporalRelation(int arity, std::vector<WeakOrder> orbits, std::string name)
    : arity_(arity), orbits_(std::move(orbits)), name_(std::move(name)) {
    if (arity_ < 1) {
        throw ContractError("TemporalRelation: arity must be >= 1");
    }
    for (const auto& w : orbits_) {
        if (w.size() != arity_) {
            throw ContractError("TemporalRelation: orbit length does not match arity");
        }
    }
    std::sort(orbits_.begin(), orbits_.end());
    orbits_.erase(std::unique(orbits_.begin(), orbits_.end()), orbits_.end());
    keys_.reserve(orbits_.size());
    for (const auto& w : orbits_) keys_.push_back(w.key());
}

TemporalRelation TemporalRelation::empty(int arity, std::string name) {
    return TemporalRelation(arity, {}, std::move(name));
}

bool TemporalRelation::contains(const WeakOrder& w) const {
    return w.size() == arity_ && contains_key(w.key());
}

bool TemporalRelation::contains_key(uint64_t key) const {
    return std::binary_search(keys_.begin(), keys_.end(), key);
}

TemporalRelation TemporalRelation::dual() const {
    std::vector<WeakOrder> rev;
    rev.reserve(orbits_.size());
    for (const auto& w : orbits_) rev.push_back(w.dual());
    std::string n = name_.empty() ? std::string() : "-" + name_;
    return TemporalRelation(arity_, std::move(rev), std::move(n));
}

std::string TemporalRelation::to_string() const {
    std::string s = name_.empty() ? "rel" : name_;
    s += "/" + std::to_string(arity_) + "{";
    for (size_t i = 0; i < orbits_.size(); ++i) {
        if (i) s += ",";
        s += orbits_[i].to_string();
    }
    return s + "}";
}

std::vector<MinTuple> chi(const TemporalRelation& r) {
    if (r.is_empty()) {
        throw ContractError("chi: relation is empty");
    }
    std::vector<MinTuple> out;
    for (const auto& w : r.orbits()) out.push_back(min_tuple(w));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<MinTuple> chi0(const TemporalRelation& r) {
    auto out = chi(r);
    MinTuple zero;
    zero.n = r.arity();
    out.push_back(zero);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tcsp
