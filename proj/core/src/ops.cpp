#include "tcsp/ops.hpp"

#include <algorithm>

#include "tcsp/error.hpp"

namespace tcsp {

Ord flip(Ord o) {
    switch (o) {
        case Ord::less: return Ord::greater;
        case Ord::greater: return Ord::less;
        default: return Ord::equal;
    }
}

std::string OpSpec::to_string() const {
    std::string base;
    switch (name) {
        case OpName::min: base = "min"; break;
        case OpName::lex: base = "lex"; break;
        case OpName::ll: base = "ll"; break;
        case OpName::pp: base = "pp"; break;
        case OpName::mi: base = "mi"; break;
        case OpName::mx: base = "mx"; break;
        case OpName::mix: base = "mix"; break;
        case OpName::proj1: base = "proj1"; break;
        case OpName::proj2: base = "proj2"; break;
    }
    if (!dual) return base;
    if (name == OpName::ll) return "dll";
    if (name == OpName::pp) return "dpp";
    return "dual-" + base;
}

OpSpec OpSpec::parse(const std::string& text) {
    std::string t = text;
    bool dual = false;
    if (t.rfind("dual-", 0) == 0) {
        dual = true;
        t = t.substr(5);
    } else if (t == "dll") {
        return {OpName::ll, true};
    } else if (t == "dpp") {
        return {OpName::pp, true};
    } else if (t == "max") {
        return {OpName::min, true};
    }
    OpName n;
    if (t == "min") n = OpName::min;
    else if (t == "lex") n = OpName::lex;
    else if (t == "ll") n = OpName::ll;
    else if (t == "pp") n = OpName::pp;
    else if (t == "mi") n = OpName::mi;
    else if (t == "mx") n = OpName::mx;
    else if (t == "mix") n = OpName::mix;
    else if (t == "proj1") n = OpName::proj1;
    else if (t == "proj2") n = OpName::proj2;
    else throw LookupError("unknown operation '" + text + "'");
    return {n, dual};
}

std::vector<OpSpec> dichotomy_ops() {
    return {{OpName::min, false}, {OpName::mi, false}, {OpName::mx, false}, {OpName::ll, false},
            {OpName::min, true},  {OpName::mi, true},  {OpName::mx, true},  {OpName::ll, true}};
}

namespace {

constexpr int64_t kPair = int64_t{1} << 20;  // lexicographic spread
constexpr int64_t kClass = int64_t{1} << 42; // separates sign classes

int64_t base_key(OpName name, int64_t x, int64_t y, std::optional<int> marker) {
    switch (name) {
        case OpName::min:
            return std::min(x, y);
        case OpName::lex:
            return x * kPair + y;
        case OpName::proj1:
            return x;
        case OpName::proj2:
            return y;
        case OpName::mi: {
            // alpha < beta < gamma tags on the shared minimum
            int tag = (x == y) ? 0 : (x > y ? 1 : 2);
            return std::min(x, y) * 4 + tag;
        }
        case OpName::mx: {
            int tag = (x != y) ? 0 : 1;
            return std::min(x, y) * 4 + tag;
        }
        case OpName::mix: {
            // gamma < alpha < beta tags
            int tag = (x > y) ? 0 : (x < y ? 1 : 2);
            return std::min(x, y) * 4 + tag;
        }
        case OpName::ll: {
            bool nonpos = x <= *marker;
            return nonpos ? x * kPair + y : kClass + y * kPair + x;
        }
        case OpName::pp: {
            bool nonpos = x <= *marker;
            return nonpos ? x * kPair : kClass + y * kPair;
        }
    }
    return 0;
}

} // namespace

int64_t op_key(OpSpec op, int x, int y, std::optional<int> marker) {
    if (op.needs_marker() != marker.has_value()) {
        throw ContractError(op.needs_marker() ? "operation " + op.to_string() + " requires a marker"
                                              : "operation " + op.to_string() + " takes no marker");
    }
    if (!op.dual) {
        return base_key(op.name, x, y, marker);
    }
    std::optional<int> m = marker ? std::optional<int>(-*marker) : std::nullopt;
    return -base_key(op.name, -x, -y, m);
}

Ord compare(OpSpec op, std::pair<int, int> p, std::pair<int, int> q, std::optional<int> marker) {
    int64_t a = op_key(op, p.first, p.second, marker);
    int64_t b = op_key(op, q.first, q.second, marker);
    return a < b ? Ord::less : (a > b ? Ord::greater : Ord::equal);
}

int ConcreteMixTable::operator()(int x, int y) const {
    if (x < 0 || y < 0) throw ContractError("ConcreteMixTable: arguments must be non-negative");
    if (x < y) return 3 * x + 1;
    if (x == y) return 3 * x + 2;
    return 3 * y;
}

std::string Interleaving::to_string() const {
    auto seq = [](const std::vector<int>& v) {
        std::string s = "[";
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + "]";
    };
    std::string s = "left=" + seq(left) + " right=" + seq(right);
    if (marker_cut) s += " cut=" + std::to_string(*marker_cut);
    return s;
}

int marker_cut_count(int ks) { return ks + 2; }

int marker_threshold(const std::vector<int>& left, int cut) {
    int ks = static_cast<int>(left.size());
    if (cut < 0 || cut > ks + 1) throw ContractError("marker cut out of range");
    if (cut == 0) return -1;
    if (cut <= ks) return left[static_cast<size_t>(cut - 1)];
    return left.back() + 1;
}

namespace {

void check_interleaving(const WeakOrder& s, const WeakOrder& t, const Interleaving& iv) {
    if (static_cast<int>(iv.left.size()) != s.block_count() ||
        static_cast<int>(iv.right.size()) != t.block_count()) {
        throw ContractError("interleaving does not match the argument block counts");
    }
    auto increasing = [](const std::vector<int>& v) {
        for (size_t i = 1; i < v.size(); ++i) {
            if (v[i] <= v[i - 1]) return false;
        }
        return true;
    };
    if (!increasing(iv.left) || !increasing(iv.right)) {
        throw ContractError("interleaving must preserve each argument's block order");
    }
    std::vector<int> all = iv.left;
    all.insert(all.end(), iv.right.begin(), iv.right.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (size_t i = 0; i < all.size(); ++i) {
        if (all[i] != static_cast<int>(i)) {
            throw ContractError("interleaving ranks must cover 0..m-1");
        }
    }
}

WeakOrder orbit_of_keys(std::span<const int64_t> keys) {
    std::vector<int64_t> sorted(keys.begin(), keys.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> ranks(keys.size());
    for (size_t i = 0; i < keys.size(); ++i) {
        ranks[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
    }
    return WeakOrder(std::move(ranks));
}

} // namespace

WeakOrder apply_binary(OpSpec op, const WeakOrder& s, const WeakOrder& t, const Interleaving& iv) {
    if (s.size() != t.size()) {
        throw ContractError("apply_binary: argument orbits have different lengths");
    }
    check_interleaving(s, t, iv);
    if (op.needs_marker() != iv.marker_cut.has_value()) {
        throw ContractError(op.needs_marker() ? "interleaving is missing the required marker"
                                              : "interleaving carries a spurious marker");
    }
    std::optional<int> theta;
    if (iv.marker_cut) theta = marker_threshold(iv.left, *iv.marker_cut);
    std::vector<int64_t> keys(static_cast<size_t>(s.size()));
    for (int i = 0; i < s.size(); ++i) {
        int x = iv.left[static_cast<size_t>(s.rank(i))];
        int y = iv.right[static_cast<size_t>(t.rank(i))];
        keys[static_cast<size_t>(i)] = op_key(op, x, y, theta);
    }
    return orbit_of_keys(keys);
}

WeakOrder apply_binary_values(OpSpec op, std::span<const int> a, std::span<const int> b) {
    if (a.size() != b.size() || a.empty()) {
        throw ContractError("apply_binary_values: argument tuples must have equal positive length");
    }
    std::optional<int> theta;
    if (op.needs_marker()) theta = 0;
    std::vector<int64_t> keys(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        keys[i] = op_key(op, a[i], b[i], theta);
    }
    return orbit_of_keys(keys);
}

} // namespace tcsp
