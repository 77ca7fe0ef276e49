#include "tcsp/classify.hpp"

#include "tcsp/error.hpp"

namespace tcsp {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::p: return "P";
        case Outcome::np_complete: return "NP-complete";
        case Outcome::needs_manual_analysis: return "needs-manual-analysis";
    }
    return "?";
}

namespace {

// The constant row of a failed-operation matrix: some non-empty relation
// without the all-equal orbit.
FailedOp constant_failure(const TemporalStructure& a) {
    for (const auto& rel : a.relations()) {
        if (rel.is_empty()) continue;
        std::vector<int> zeros(static_cast<size_t>(rel.arity()), 0);
        if (!rel.contains(WeakOrder(std::move(zeros)))) {
            return {"constant", rel.name(), std::nullopt};
        }
    }
    throw Error("constant_failure called on a structure with a constant polymorphism");
}

} // namespace

Verdict classify_temporal(const TemporalStructure& a) {
    Verdict v;
    if (has_constant_polymorphism(a)) {
        v.outcome = Outcome::p;
        v.route = "constant";
        v.witness_op = "constant";
        return v;
    }
    std::vector<FailedOp> matrix;
    for (const auto& op : dichotomy_ops()) {
        auto res = preserves(op, a);
        if (res.preserved) {
            v.outcome = Outcome::p;
            v.route = "common-op";
            v.witness_op = op.to_string();
            return v;
        }
        matrix.push_back({op.to_string(), res.witness->relation, res.witness});
    }
    matrix.push_back(constant_failure(a));
    v.outcome = Outcome::np_complete;
    v.route = "common-op";
    v.matrix = std::move(matrix);
    return v;
}

Tri has_binary_injective(const TemporalStructure& a) {
    if (preserves(OpSpec::parse("ll"), a).preserved || preserves(OpSpec::parse("dll"), a).preserved) {
        return Tri::yes;
    }
    for (const char* op : {"min", "mi", "mx", "dual-min", "dual-mi", "dual-mx"}) {
        if (preserves(OpSpec::parse(op), a).preserved) return Tri::no;
    }
    return Tri::unknown;
}

TemporalStructure union_structure(const TemporalStructure& a1, const TemporalStructure& a2) {
    TemporalStructure u(a1.name() + "+" + a2.name());
    for (const auto& rel : a1.relations()) u.add(a1.name() + "." + rel.name(), rel);
    for (const auto& rel : a2.relations()) u.add(a2.name() + "." + rel.name(), rel);
    return u;
}

Verdict classify_combination(const TemporalStructure& a1, const TemporalStructure& a2) {
    // (i) one side preserved by all permutations: the combination is itself a
    // temporal structure
    if (preserved_by_all_permutations(a1) || preserved_by_all_permutations(a2)) {
        Verdict v = classify_temporal(union_structure(a1, a2));
        v.route = "all-perms-union";
        return v;
    }
    // (ii) both sides constant
    if (has_constant_polymorphism(a1) && has_constant_polymorphism(a2)) {
        Verdict v;
        v.outcome = Outcome::p;
        v.route = "both-constant";
        v.witness_op = "constant";
        return v;
    }
    // a hard side makes the combination hard
    Verdict v1 = classify_temporal(a1);
    Verdict v2 = classify_temporal(a2);
    for (const auto* side : {&v1, &v2}) {
        if (side->outcome == Outcome::np_complete) {
            Verdict v = *side;
            v.route = "single-side-hard";
            v.detail = side == &v1 ? "side 1 is NP-complete" : "side 2 is NP-complete";
            return v;
        }
    }
    // (iii) both tractable: binary injectivity decides
    Tri b1 = has_binary_injective(a1);
    Tri b2 = has_binary_injective(a2);
    if (b1 == Tri::yes && b2 == Tri::yes) {
        Verdict v;
        v.outcome = Outcome::p;
        v.route = "both-bin-inj";
        v.witness_op = v1.witness_op + "+" + v2.witness_op;
        return v;
    }
    if (b1 == Tri::unknown || b2 == Tri::unknown) {
        Verdict v;
        v.outcome = Outcome::needs_manual_analysis;
        v.route = "no-route";
        v.detail = "binary injective polymorphism undecided for a side outside the dichotomy hypothesis";
        return v;
    }
    // (iv) otherwise
    Verdict v;
    v.outcome = Outcome::np_complete;
    v.route = "no-route";
    for (int side = 1; side <= 2; ++side) {
        const auto& a = side == 1 ? a1 : a2;
        const auto tri = side == 1 ? b1 : b2;
        if (tri == Tri::no) {
            for (const char* op : {"ll", "dll"}) {
                auto res = preserves(OpSpec::parse(op), a);
                if (!res.preserved) {
                    v.matrix.push_back({"side" + std::to_string(side) + ":" + op,
                                        res.witness->relation, res.witness});
                }
            }
        }
    }
    v.detail = "no side pair satisfies a tractable combination route";
    return v;
}

} // namespace tcsp
