#include "braceforge/brace.hpp"

#include <algorithm>

#include "braceforge/named_groups.hpp"

namespace braceforge {

namespace {

// Index of the two sided identity of a raw table, or kNoElt. Used to give
// IdentityMismatch before group_from_table would silently relabel.
Elt find_identity(int n, const std::vector<Elt>& table) {
    for (Elt e = 0; e < n; ++e) {
        bool ok = true;
        for (Elt b = 0; b < n && ok; ++b)
            ok = table[static_cast<std::size_t>(e) * n + b] == b &&
                 table[static_cast<std::size_t>(b) * n + e] == b;
        if (ok) return e;
    }
    return kNoElt;
}

void check_identity_at_zero(int n, const std::vector<Elt>& table, const char* which) {
    const Elt e = find_identity(n, table);
    if (e != kNoElt && e != 0) throw IdentityMismatch(which, e);
    // a table without any identity falls through to group_from_table, which
    // reports NoIdentity with more context
}

void check_compatibility(const FiniteGroup& add, const FiniteGroup& mul) {
    const int n = add.n;
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            const Elt ab = mul.op(a, b);
            const Elt left = add.op(ab, add.inv[a]);
            for (Elt c = 0; c < n; ++c)
                if (mul.op(a, add.op(b, c)) != add.op(left, mul.op(a, c)))
                    throw CompatibilityFailure(a, b, c);
        }
}

bool is_permutation(int n, const GroupMorphism& f) {
    if (static_cast<int>(f.map.size()) != n) return false;
    std::vector<bool> seen(n, false);
    for (Elt v : f.map) {
        if (v >= n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

GroupMorphism inverse_permutation(int n, const GroupMorphism& f) {
    GroupMorphism g;
    g.map.assign(n, 0);
    for (Elt a = 0; a < n; ++a) g.map[f.map[a]] = a;
    return g;
}

}  // namespace

SkewBrace make_skew_brace(int n, std::vector<Elt> add_table, std::vector<Elt> mul_table,
                          std::vector<std::string> labels) {
    if (n < 1) throw ValidationError("brace order must be positive");
    check_identity_at_zero(n, add_table, "additive");
    check_identity_at_zero(n, mul_table, "circle");
    SkewBrace b{group_from_table(n, std::move(add_table), labels),
                group_from_table(n, std::move(mul_table), std::move(labels))};
    check_compatibility(b.add, b.mul);
    return b;
}

void verify_skew_brace(const SkewBrace& b) {
    if (b.add.n != b.mul.n) throw ValidationError("the two tables disagree on the order");
    check_identity_at_zero(b.add.n, b.add.table, "additive");
    check_identity_at_zero(b.mul.n, b.mul.table, "circle");
    const FiniteGroup add = group_from_table(b.add.n, b.add.table);
    const FiniteGroup mul = group_from_table(b.mul.n, b.mul.table);
    if (add.inv != b.add.inv || mul.inv != b.mul.inv)
        throw ValidationError("cached inverse arrays do not match the tables");
    check_compatibility(add, mul);
}

std::vector<GroupMorphism> lambda_map(const SkewBrace& b) {
    const int n = b.size();
    std::vector<GroupMorphism> out(n);
    for (Elt a = 0; a < n; ++a) {
        out[a].map.resize(n);
        for (Elt x = 0; x < n; ++x) out[a].map[x] = b.lambda(a, x);
        if (!is_permutation(n, out[a]) || !is_homomorphism(b.add, b.add, out[a]))
            throw ValidationError("lambda map of element " + std::to_string(a) +
                                  " is not an additive automorphism");
    }
    for (Elt a = 0; a < n; ++a)
        for (Elt x = 0; x < n; ++x)
            if (out[b.mul.op(a, x)] != compose(out[a], out[x]))
                throw ValidationError("lambda is not a homomorphism at (" +
                                      std::to_string(a) + ", " + std::to_string(x) + ")");
    return out;
}

std::vector<GroupMorphism> mu_map(const SkewBrace& b) {
    const int n = b.size();
    std::vector<GroupMorphism> out(n);
    for (Elt s = 0; s < n; ++s) {
        out[s].map.resize(n);
        for (Elt a = 0; a < n; ++a) out[s].map[a] = b.mu(s, a);
        if (!is_permutation(n, out[s]))
            throw ValidationError("mu map of element " + std::to_string(s) +
                                  " is not a permutation");
    }
    for (Elt x = 0; x < n; ++x)
        if (out[0].map[x] != x) throw ValidationError("mu of the identity is not the identity map");
    for (Elt a = 0; a < n; ++a)
        for (Elt s = 0; s < n; ++s)
            if (out[b.mul.op(a, s)] != compose(out[s], out[a]))
                throw ValidationError("mu composition law fails at (" + std::to_string(a) +
                                      ", " + std::to_string(s) + ")");
    return out;
}

Elt bar_inverse(const SkewBrace& b, Elt a) {
    const Elt target = b.add.inv[a];
    for (Elt x = 0; x < b.size(); ++x)
        if (b.lambda(a, x) == target) return x;
    throw ValidationError("lambda map of element " + std::to_string(a) +
                          " misses the additive inverse");
}

SkewBrace from_lambda(const FiniteGroup& add, const std::vector<GroupMorphism>& f) {
    const int n = add.n;
    if (static_cast<int>(f.size()) != n)
        throw ValidationError("need one map per element, got " + std::to_string(f.size()));
    for (Elt a = 0; a < n; ++a)
        if (!is_permutation(n, f[a]) || !is_homomorphism(add, add, f[a]))
            throw NotAutomorphism(a);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            if (f[add.op(a, f[a](b))] != compose(f[a], f[b])) throw CompositionLawFailure(a, b);

    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = add.op(a, f[a](b));
    return make_skew_brace(n, add.table, std::move(mul), add.labels);
}

SkewBrace from_dual_lambda(const FiniteGroup& mul, const std::vector<GroupMorphism>& f) {
    const int n = mul.n;
    if (static_cast<int>(f.size()) != n)
        throw ValidationError("need one map per element, got " + std::to_string(f.size()));
    std::vector<GroupMorphism> finv(n);
    for (Elt a = 0; a < n; ++a) {
        if (!is_permutation(n, f[a]))
            throw ValidationError("map of element " + std::to_string(a) +
                                  " is not a permutation of the carrier");
        if (f[a](0) != 0) throw UnitNotFixed(a);
        finv[a] = inverse_permutation(n, f[a]);
    }
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            if (f[mul.op(a, b)] != compose(f[a], f[b])) throw CompositionLawFailure(a, b);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            const Elt fab = f[a](b);
            for (Elt c = 0; c < n; ++c)
                if (f[a](mul.op(b, finv[b](c))) != mul.op(fab, finv[fab](f[a](c))))
                    throw HypothesisFailure(a, b, c);
        }

    std::vector<Elt> add(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            add[static_cast<std::size_t>(a) * n + b] = mul.op(a, finv[a](b));
    return make_skew_brace(n, std::move(add), mul.table, mul.labels);
}

std::optional<std::array<Elt, 3>> two_sided_witness(const SkewBrace& b) {
    const int n = b.size();
    for (Elt x = 0; x < n; ++x)
        for (Elt y = 0; y < n; ++y) {
            const Elt xy = b.add.op(x, y);
            for (Elt c = 0; c < n; ++c) {
                const Elt lhs = b.mul.op(xy, c);
                const Elt rhs = b.add.op(b.add.op(b.mul.op(x, c), b.add.inv[c]), b.mul.op(y, c));
                if (lhs != rhs) return std::array<Elt, 3>{x, y, c};
            }
        }
    return std::nullopt;
}

bool is_two_sided(const SkewBrace& b) { return !two_sided_witness(b).has_value(); }

FiniteGroup crossed_group(const SkewBrace& b, int max_order) {
    const int n = b.size();
    const long order = static_cast<long>(n) * n;
    if (order > max_order)
        throw ResourceError("crossed group would have order " + std::to_string(order) +
                            ", beyond the table budget of " + std::to_string(max_order));
    std::vector<Elt> table(static_cast<std::size_t>(order) * order);
    for (Elt x = 0; x < n; ++x)
        for (Elt a = 0; a < n; ++a) {
            const long p = static_cast<long>(x) * n + a;
            for (Elt y = 0; y < n; ++y)
                for (Elt bb = 0; bb < n; ++bb) {
                    const long q = static_cast<long>(y) * n + bb;
                    const Elt first = b.add.op(a, b.lambda(x, bb));
                    const Elt second = b.mul.op(x, y);
                    table[static_cast<std::size_t>(p) * order + q] =
                        static_cast<Elt>(static_cast<long>(second) * n + first);
                }
        }
    return group_from_table(static_cast<int>(order), std::move(table));
}

std::optional<GroupMorphism> brace_isomorphism(const SkewBrace& x, const SkewBrace& y) {
    if (x.size() != y.size()) return std::nullopt;
    const int n = x.size();
    std::optional<GroupMorphism> found;
    enumerate_isomorphisms(x.add, y.add, [&](const GroupMorphism& f) {
        for (Elt a = 0; a < n; ++a)
            for (Elt b = 0; b < n; ++b)
                if (f(x.mul.op(a, b)) != y.mul.op(f(a), f(b))) return true;  // keep searching
        found = f;
        return false;
    });
    return found;
}

bool braces_isomorphic(const SkewBrace& x, const SkewBrace& y) {
    return brace_isomorphism(x, y).has_value();
}

BraceKey canonical_key(const SkewBrace& b) {
    const int n = b.size();
    const auto& cat = catalogue_order(n);
    int type = -1;
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (are_isomorphic(b.add, cat[i].group)) {
            type = static_cast<int>(i);
            break;
        }
    if (type < 0)
        throw ValidationError("additive group missing from the order " + std::to_string(n) +
                              " catalogue");
    const FiniteGroup& rep = cat[static_cast<std::size_t>(type)].group;
    std::vector<Elt> best;
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    enumerate_isomorphisms(b.add, rep, [&](const GroupMorphism& f) {
        for (Elt p = 0; p < n; ++p)
            for (Elt q = 0; q < n; ++q)
                t[static_cast<std::size_t>(f(p)) * n + f(q)] = f(b.mul.op(p, q));
        if (best.empty() || t < best) best = t;
        return true;  // the minimum needs every isomorphism visited
    });
    return BraceKey{n, type, std::move(best)};
}

SkewBrace trivial_brace(const FiniteGroup& g) { return SkewBrace{g, g}; }

SkewBrace almost_trivial_brace(const FiniteGroup& g) {
    const int n = g.n;
    std::vector<Elt> opp(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) opp[static_cast<std::size_t>(a) * n + b] = g.op(b, a);
    return SkewBrace{g, group_from_table(n, std::move(opp), g.labels)};
}

}  // namespace braceforge
