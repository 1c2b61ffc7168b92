#include "braceforge/constructions.hpp"

#include <algorithm>

#include "braceforge/named_groups.hpp"

namespace braceforge {

namespace {

bool is_bijection(const std::vector<Elt>& map, int n) {
    if (static_cast<int>(map.size()) != n) return false;
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Elt v : map) {
        if (v >= n || hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

std::vector<Elt> positions(const Subgroup& s, int n) {
    std::vector<Elt> pos(static_cast<std::size_t>(n), kNoElt);
    for (std::size_t i = 0; i < s.elems.size(); ++i) pos[s.elems[i]] = static_cast<Elt>(i);
    return pos;
}

bool intersect_trivially(const Subgroup& s, const Subgroup& t) {
    std::vector<Elt> both;
    std::set_intersection(s.elems.begin(), s.elems.end(), t.elems.begin(), t.elems.end(),
                          std::back_inserter(both));
    return both.size() == 1;  // the shared identity
}

bool products_cover(const FiniteGroup& g, const Subgroup& s, const Subgroup& t) {
    std::vector<char> hit(static_cast<std::size_t>(g.n), 0);
    int count = 0;
    for (Elt p : s.elems)
        for (Elt q : t.elems) {
            char& c = hit[g.op(p, q)];
            if (!c) {
                c = 1;
                ++count;
            }
        }
    return count == g.n;
}

std::vector<std::string> pair_labels(const FiniteGroup& x, const FiniteGroup& y) {
    if (x.labels.empty() && y.labels.empty()) return {};
    std::vector<std::string> out;
    out.reserve(static_cast<std::size_t>(x.n) * y.n);
    for (Elt a = 0; a < x.n; ++a)
        for (Elt b = 0; b < y.n; ++b) out.push_back("(" + x.label(a) + "," + y.label(b) + ")");
    return out;
}

// Shared validation for the semidirect constructions: every map must
// preserve both tables of the acted brace and the family must compose along
// the acting circle group.
void check_brace_action(const SkewBrace& acting, const SkewBrace& acted,
                        const std::vector<GroupMorphism>& f, const std::string& name) {
    if (static_cast<int>(f.size()) != acting.size())
        throw ValidationError(name + " needs one map per element of the acting brace");
    for (Elt a = 0; a < acting.size(); ++a) {
        if (!is_bijection(f[a].map, acted.size()) || !is_homomorphism(acted.add, acted.add, f[a]) ||
            !is_homomorphism(acted.mul, acted.mul, f[a]))
            throw NotBraceAutomorphism(a);
    }
    for (Elt a = 0; a < acting.size(); ++a)
        for (Elt a2 = 0; a2 < acting.size(); ++a2)
            if (f[acting.mul.op(a, a2)].map != compose(f[a], f[a2]).map)
                throw ValidationError(name + " does not compose along the circle group at (" +
                                      std::to_string(a) + ", " + std::to_string(a2) + ")");
}

}  // namespace

ExactFactorization exact_factorization(const FiniteGroup& g, const Subgroup& b,
                                       const Subgroup& c) {
    if (!is_subgroup(g, b)) throw ValidationError("the left factor is not a subgroup");
    if (!is_subgroup(g, c)) throw ValidationError("the right factor is not a subgroup");
    if (!intersect_trivially(b, c))
        throw ValidationError("the factors intersect beyond the identity");
    if (b.size() * c.size() != g.n)
        throw ValidationError("factor sizes " + std::to_string(b.size()) + " * " +
                              std::to_string(c.size()) + " do not multiply to the group order " +
                              std::to_string(g.n));

    // Trivial intersection makes the b * c products pairwise distinct, and
    // the size check makes them exhaustive, so each element splits once.
    ExactFactorization f{g, b, c, std::vector<Elt>(static_cast<std::size_t>(g.n), kNoElt),
                         std::vector<Elt>(static_cast<std::size_t>(g.n), kNoElt)};
    for (Elt p : b.elems)
        for (Elt q : c.elems) {
            const Elt x = g.op(p, q);
            f.left[x] = p;
            f.right[x] = q;
        }
    return f;
}

SkewBrace brace_from_exact_factorization(const ExactFactorization& f) {
    const int n = f.g.n;
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt a2 = 0; a2 < n; ++a2)
            mul[static_cast<std::size_t>(a) * n + a2] = f.g.op(f.g.op(f.left[a], a2), f.right[a]);
    SkewBrace out = make_skew_brace(n, f.g.table, std::move(mul), f.g.labels);

    const FiniteGroup prod = direct_product(subgroup_group(f.g, f.b), subgroup_group(f.g, f.c));
    if (!are_isomorphic(out.mul, prod))
        throw ValidationError("circle group is not the direct product of the factors");
    return out;
}

BijectiveCocycle make_bijective_cocycle(FiniteGroup g, FiniteGroup a,
                                        std::vector<GroupMorphism> action, std::vector<Elt> pi) {
    if (g.n != a.n) throw ValidationError("a bijection needs groups of equal order");
    if (static_cast<int>(action.size()) != g.n)
        throw ValidationError("need one action map per element of the acting group");
    if (!is_bijection(pi, a.n)) throw ValidationError("pi is not a bijection onto the target");
    for (Elt x = 0; x < g.n; ++x)
        if (!is_bijection(action[x].map, a.n) || !is_homomorphism(a, a, action[x]))
            throw NotAutomorphism(x);
    for (Elt x = 0; x < g.n; ++x)
        for (Elt y = 0; y < g.n; ++y)
            if (action[g.op(x, y)].map != compose(action[x], action[y]).map)
                throw ValidationError("the action does not compose at (" + std::to_string(x) +
                                      ", " + std::to_string(y) + ")");
    for (Elt x = 0; x < g.n; ++x)
        for (Elt y = 0; y < g.n; ++y)
            if (pi[g.op(x, y)] != a.op(pi[x], action[x](pi[y]))) throw CocycleLawFailure(x, y);
    return BijectiveCocycle{std::move(g), std::move(a), std::move(action), std::move(pi)};
}

BijectiveCocycle cocycle_from_bijection(const FiniteGroup& g, const FiniteGroup& a,
                                        std::vector<Elt> pi) {
    if (g.n != a.n) throw ValidationError("a bijection needs groups of equal order");
    if (!is_bijection(pi, a.n)) throw ValidationError("pi is not a bijection onto the target");
    std::vector<Elt> pinv(static_cast<std::size_t>(a.n));
    for (Elt x = 0; x < g.n; ++x) pinv[pi[x]] = x;
    std::vector<GroupMorphism> action(static_cast<std::size_t>(g.n));
    for (Elt x = 0; x < g.n; ++x) {
        action[x].map.resize(static_cast<std::size_t>(a.n));
        for (Elt v = 0; v < a.n; ++v)
            action[x].map[v] = a.op(a.inv[pi[x]], pi[g.op(x, pinv[v])]);
    }
    return make_bijective_cocycle(g, a, std::move(action), std::move(pi));
}

SkewBrace brace_from_cocycle(const BijectiveCocycle& c) {
    const int n = c.a.n;
    std::vector<Elt> pinv(static_cast<std::size_t>(n));
    for (Elt x = 0; x < n; ++x) pinv[c.pi[x]] = x;
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (Elt u = 0; u < n; ++u)
        for (Elt v = 0; v < n; ++v)
            mul[static_cast<std::size_t>(u) * n + v] = c.pi[c.g.op(pinv[u], pinv[v])];
    return make_skew_brace(n, c.a.table, std::move(mul), c.a.labels);
}

BijectiveCocycle cocycle_from_brace(const SkewBrace& b) {
    std::vector<Elt> pi(static_cast<std::size_t>(b.size()));
    for (Elt x = 0; x < b.size(); ++x) pi[x] = x;
    return make_bijective_cocycle(b.mul, b.add, lambda_map(b), std::move(pi));
}

MatchedPairGroups make_matched_pair(FiniteGroup a, FiniteGroup b, std::vector<Elt> to_a,
                                    std::vector<Elt> to_b) {
    const std::size_t cells = static_cast<std::size_t>(a.n) * b.n;
    if (to_a.size() != cells || to_b.size() != cells)
        throw ValidationError("action tables need one cell per pair");
    const auto ra = [&](Elt bb, Elt aa) { return to_a[static_cast<std::size_t>(bb) * a.n + aa]; };
    const auto rb = [&](Elt bb, Elt aa) { return to_b[static_cast<std::size_t>(bb) * a.n + aa]; };
    for (Elt v : to_a)
        if (v >= a.n) throw ValidationError("a value in the to-a table is out of range");
    for (Elt v : to_b)
        if (v >= b.n) throw ValidationError("a value in the to-b table is out of range");

    for (Elt aa = 0; aa < a.n; ++aa)
        if (ra(0, aa) != aa)
            throw ValidationError("the identity does not act trivially in the to-a table");
    for (Elt bb = 0; bb < b.n; ++bb)
        if (rb(bb, 0) != bb)
            throw ValidationError("the identity does not act trivially in the to-b table");
    for (Elt b1 = 0; b1 < b.n; ++b1)
        for (Elt b2 = 0; b2 < b.n; ++b2)
            for (Elt aa = 0; aa < a.n; ++aa)
                if (ra(b.op(b1, b2), aa) != ra(b1, ra(b2, aa)))
                    throw ValidationError("the to-a table is not a left action at (" +
                                          std::to_string(b1) + ", " + std::to_string(b2) + ", " +
                                          std::to_string(aa) + ")");
    for (Elt bb = 0; bb < b.n; ++bb)
        for (Elt a1 = 0; a1 < a.n; ++a1)
            for (Elt a2 = 0; a2 < a.n; ++a2)
                if (rb(bb, a.op(a1, a2)) != rb(rb(bb, a1), a2))
                    throw ValidationError("the to-b table is not a right action at (" +
                                          std::to_string(bb) + ", " + std::to_string(a1) + ", " +
                                          std::to_string(a2) + ")");

    for (Elt bb = 0; bb < b.n; ++bb)
        for (Elt a1 = 0; a1 < a.n; ++a1)
            for (Elt a2 = 0; a2 < a.n; ++a2)
                if (ra(bb, a.op(a1, a2)) != a.op(ra(bb, a1), ra(rb(bb, a1), a2)))
                    throw ValidationError("product splitting fails on the a side at (" +
                                          std::to_string(bb) + ", " + std::to_string(a1) + ", " +
                                          std::to_string(a2) + ")");
    for (Elt b1 = 0; b1 < b.n; ++b1)
        for (Elt b2 = 0; b2 < b.n; ++b2)
            for (Elt aa = 0; aa < a.n; ++aa)
                if (rb(b.op(b1, b2), aa) != b.op(rb(b1, ra(b2, aa)), rb(b2, aa)))
                    throw ValidationError("product splitting fails on the b side at (" +
                                          std::to_string(b1) + ", " + std::to_string(b2) + ", " +
                                          std::to_string(aa) + ")");
    return MatchedPairGroups{std::move(a), std::move(b), std::move(to_a), std::move(to_b)};
}

MatchedPairGroups matched_pair_from_factorization(const ExactFactorization& f) {
    const FiniteGroup ga = subgroup_group(f.g, f.b);
    const FiniteGroup gb = subgroup_group(f.g, f.c);
    const std::vector<Elt> pos_a = positions(f.b, f.g.n);
    const std::vector<Elt> pos_b = positions(f.c, f.g.n);

    // Moving a right-factor element past a left-factor element and splitting
    // the product again yields both actions at once.
    std::vector<Elt> to_a(static_cast<std::size_t>(ga.n) * gb.n);
    std::vector<Elt> to_b(to_a.size());
    for (Elt bb = 0; bb < gb.n; ++bb)
        for (Elt aa = 0; aa < ga.n; ++aa) {
            const Elt prod = f.g.op(f.c.elems[bb], f.b.elems[aa]);
            to_a[static_cast<std::size_t>(bb) * ga.n + aa] = pos_a[f.left[prod]];
            to_b[static_cast<std::size_t>(bb) * ga.n + aa] = pos_b[f.right[prod]];
        }
    return make_matched_pair(ga, gb, std::move(to_a), std::move(to_b));
}

MatchedPairGroups matched_pair_groups_from_brace(const SkewBrace& x) {
    const int n = x.size();
    std::vector<Elt> to_a(static_cast<std::size_t>(n) * n);
    std::vector<Elt> to_b(to_a.size());
    for (Elt actor = 0; actor < n; ++actor)
        for (Elt arg = 0; arg < n; ++arg) {
            to_a[static_cast<std::size_t>(actor) * n + arg] = x.lambda(actor, arg);
            to_b[static_cast<std::size_t>(actor) * n + arg] = x.mu(arg, actor);
        }
    return make_matched_pair(x.mul, x.mul, std::move(to_a), std::move(to_b));
}

FiniteGroup biproduct_group(const MatchedPairGroups& m) {
    const int an = m.a.n, bn = m.b.n;
    const int n = an * bn;
    std::vector<Elt> table(static_cast<std::size_t>(n) * n);
    for (Elt a1 = 0; a1 < an; ++a1)
        for (Elt b1 = 0; b1 < bn; ++b1)
            for (Elt a2 = 0; a2 < an; ++a2)
                for (Elt b2 = 0; b2 < bn; ++b2) {
                    const Elt ra = m.to_a[static_cast<std::size_t>(b1) * an + a2];
                    const Elt rb = m.to_b[static_cast<std::size_t>(b1) * an + a2];
                    table[(static_cast<std::size_t>(a1) * bn + b1) * n + a2 * bn + b2] =
                        static_cast<Elt>(m.a.op(a1, ra) * bn + m.b.op(rb, b2));
                }
    return group_from_table(n, std::move(table), pair_labels(m.a, m.b));
}

SkewBrace biproduct_brace(const MatchedPairGroups& m) {
    const FiniteGroup add = biproduct_group(m);
    const int an = m.a.n, bn = m.b.n;
    const int n = an * bn;
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (Elt a1 = 0; a1 < an; ++a1)
        for (Elt b1 = 0; b1 < bn; ++b1)
            for (Elt a2 = 0; a2 < an; ++a2)
                for (Elt b2 = 0; b2 < bn; ++b2)
                    mul[(static_cast<std::size_t>(a1) * bn + b1) * n + a2 * bn + b2] =
                        static_cast<Elt>(m.a.op(a1, a2) * bn + m.b.op(b2, b1));
    return make_skew_brace(n, add.table, std::move(mul), add.labels);
}

SkewBrace direct_product_brace(const SkewBrace& x, const SkewBrace& y) {
    const FiniteGroup add = direct_product(x.add, y.add);
    const FiniteGroup mul = direct_product(x.mul, y.mul);
    return make_skew_brace(add.n, add.table, mul.table, pair_labels(x.add, y.add));
}

SkewBrace semidirect_brace_left(const SkewBrace& x, const SkewBrace& y,
                                const std::vector<GroupMorphism>& alpha) {
    check_brace_action(x, y, alpha, "the left action");
    const FiniteGroup add = direct_product(x.add, y.add);
    const int yn = y.size();
    std::vector<Elt> mul(static_cast<std::size_t>(add.n) * add.n);
    for (Elt a = 0; a < x.size(); ++a)
        for (Elt b = 0; b < yn; ++b)
            for (Elt a2 = 0; a2 < x.size(); ++a2)
                for (Elt b2 = 0; b2 < yn; ++b2)
                    mul[(static_cast<std::size_t>(a) * yn + b) * add.n + a2 * yn + b2] =
                        static_cast<Elt>(x.mul.op(a, a2) * yn + y.mul.op(b, alpha[a](b2)));
    return make_skew_brace(add.n, add.table, std::move(mul), pair_labels(x.add, y.add));
}

SkewBrace semidirect_brace_right(const SkewBrace& x, const SkewBrace& y,
                                 const std::vector<GroupMorphism>& beta) {
    check_brace_action(y, x, beta, "the right action");
    const FiniteGroup add = direct_product(x.add, y.add);
    const int yn = y.size();
    std::vector<Elt> mul(static_cast<std::size_t>(add.n) * add.n);
    for (Elt a = 0; a < x.size(); ++a)
        for (Elt b = 0; b < yn; ++b)
            for (Elt a2 = 0; a2 < x.size(); ++a2)
                for (Elt b2 = 0; b2 < yn; ++b2)
                    mul[(static_cast<std::size_t>(a) * yn + b) * add.n + a2 * yn + b2] =
                        static_cast<Elt>(x.mul.op(a, beta[b](a2)) * yn + y.mul.op(b, b2));
    return make_skew_brace(add.n, add.table, std::move(mul), pair_labels(x.add, y.add));
}

SkewBrace double_brace(const SkewBrace& x) {
    const int n = x.size();
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            const Elt ab = x.lambda(a, b);
            for (Elt v = 0; v < n; ++v)
                if (x.lambda(a, x.lambda(b, v)) != x.lambda(ab, x.lambda(a, v)))
                    throw ValidationError(
                        "lambda_a lambda_b != lambda_{lambda_a(b)} lambda_a at (a, b) = (" +
                        std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    return semidirect_brace_left(x, x, lambda_map(x));
}

SkewBrace wreath_brace(const SkewBrace& x, const SkewBrace& y,
                       const std::vector<std::vector<Elt>>& rep) {
    if (static_cast<int>(rep.size()) != y.size())
        throw NotPermutationRep("need one row per element of the circle group");
    const int m = static_cast<int>(rep[0].size());
    if (m < 1) throw NotPermutationRep("the degree must be at least 1");
    for (Elt b = 0; b < y.size(); ++b)
        if (!is_bijection(rep[b], m))
            throw NotPermutationRep("row " + std::to_string(b) +
                                    " is not a permutation of the coordinates");
    for (Elt b = 0; b < y.size(); ++b)
        for (Elt b2 = 0; b2 < y.size(); ++b2)
            for (int i = 0; i < m; ++i)
                if (rep[y.mul.op(b, b2)][static_cast<std::size_t>(i)] !=
                    rep[b2][rep[b][static_cast<std::size_t>(i)]])
                    throw NotPermutationRep("rows do not compose along the circle group at (" +
                                            std::to_string(b) + ", " + std::to_string(b2) + ")");

    long long tuples = 1;
    for (int i = 0; i < m; ++i) {
        tuples *= x.size();
        if (tuples * y.size() > 4096)
            throw ResourceError("wreath carrier exceeds the table budget");
    }

    SkewBrace power = x;
    for (int i = 1; i < m; ++i) power = direct_product_brace(power, x);

    // Coordinate 0 is the most significant digit, so shuffling digits by a
    // row of rep realises the coordinate permutation on tuple indices.
    std::vector<GroupMorphism> delta(static_cast<std::size_t>(y.size()));
    std::vector<Elt> digits(static_cast<std::size_t>(m));
    for (Elt b = 0; b < y.size(); ++b) {
        delta[b].map.resize(static_cast<std::size_t>(power.size()));
        for (Elt t = 0; t < power.size(); ++t) {
            int rest = t;
            for (int i = m - 1; i >= 0; --i) {
                digits[static_cast<std::size_t>(i)] = static_cast<Elt>(rest % x.size());
                rest /= x.size();
            }
            int image = 0;
            for (int i = 0; i < m; ++i)
                image = image * x.size() + digits[rep[b][static_cast<std::size_t>(i)]];
            delta[b].map[t] = static_cast<Elt>(image);
        }
    }
    return semidirect_brace_right(power, y, delta);
}

TriplyFactorizedGroup make_triply_factorized(FiniteGroup g, Subgroup a, Subgroup b, Subgroup m) {
    if (!is_subgroup(g, a)) throw ValidationError("the a factor is not a subgroup");
    if (!is_subgroup(g, b)) throw ValidationError("the b factor is not a subgroup");
    if (!is_subgroup(g, m)) throw ValidationError("the m factor is not a subgroup");
    if (!intersect_trivially(a, m))
        throw ValidationError("the a and m factors intersect beyond the identity");
    if (!intersect_trivially(b, m))
        throw ValidationError("the b and m factors intersect beyond the identity");
    if (!products_cover(g, a, m)) throw ValidationError("the products a*m do not cover the group");
    if (!products_cover(g, b, m)) throw ValidationError("the products b*m do not cover the group");
    if (!products_cover(g, a, b)) throw ValidationError("the products a*b do not cover the group");
    return TriplyFactorizedGroup{std::move(g), std::move(a), std::move(b), std::move(m)};
}

TriplyFactorizedGroup triply_factorized_from_brace(const SkewBrace& x) {
    FiniteGroup g = crossed_group(x);
    const int n = x.size();
    Subgroup a, b, m;
    for (Elt v = 0; v < n; ++v) {
        a.elems.push_back(v);
        m.elems.push_back(static_cast<Elt>(v * n));
        b.elems.push_back(static_cast<Elt>(v * n + v));
    }
    std::sort(b.elems.begin(), b.elems.end());
    return make_triply_factorized(std::move(g), std::move(a), std::move(b), std::move(m));
}

TriplyFactorizedGroup swap_am(const TriplyFactorizedGroup& t) {
    return make_triply_factorized(t.g, t.m, t.b, t.a);
}

SkewBrace sysak_brace(const TriplyFactorizedGroup& t) {
    const FiniteGroup& g = t.g;
    if (!is_normal(g, t.m)) throw ValidationError("the m factor is not normal in the group");
    if (!intersect_trivially(t.a, t.b))
        throw ValidationError("the a and b factors intersect beyond the identity");
    if (t.a.size() != t.m.size())
        throw ValidationError("the a and m factors differ in size, gamma cannot be a bijection");

    const int k = t.m.size();
    const std::vector<Elt> pos = positions(t.m, g.n);

    // gamma(m) is the one a element completing m into b; with m normal and
    // a meeting b trivially it exists and is unique, and m -> gamma(m) is a
    // bijection onto the a factor.
    std::vector<Elt> gamma(static_cast<std::size_t>(k), kNoElt);
    std::vector<Elt> gamma_pos(static_cast<std::size_t>(g.n), kNoElt);
    for (int i = 0; i < k; ++i) {
        int found = 0;
        for (Elt aa : t.a.elems)
            if (t.b.contains(g.op(t.m.elems[static_cast<std::size_t>(i)], aa))) {
                gamma[static_cast<std::size_t>(i)] = aa;
                ++found;
            }
        if (found != 1) throw GammaUndefined(t.m.elems[static_cast<std::size_t>(i)], found);
        if (gamma_pos[gamma[static_cast<std::size_t>(i)]] != kNoElt)
            throw ValidationError("gamma is not injective");
        gamma_pos[gamma[static_cast<std::size_t>(i)]] = static_cast<Elt>(i);
    }

    std::vector<Elt> add(static_cast<std::size_t>(k) * k);
    std::vector<Elt> mul(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Elt mi = t.m.elems[static_cast<std::size_t>(i)];
            const Elt mj = t.m.elems[static_cast<std::size_t>(j)];
            add[static_cast<std::size_t>(i) * k + j] = pos[g.op(mi, mj)];
            mul[static_cast<std::size_t>(i) * k + j] =
                gamma_pos[g.op(gamma[static_cast<std::size_t>(i)],
                               gamma[static_cast<std::size_t>(j)])];
        }
    std::vector<std::string> labels;
    if (!g.labels.empty())
        for (Elt e : t.m.elems) labels.push_back(g.label(e));
    SkewBrace out = make_skew_brace(k, std::move(add), std::move(mul), std::move(labels));

    // The group of pairs over the rebuilt brace must reproduce the ambient
    // group through (m, x) -> m gamma(x).
    const FiniteGroup pairs = crossed_group(out);
    if (pairs.n != g.n)
        throw ValidationError("the pair group and the ambient group differ in size");
    GroupMorphism embed;
    embed.map.resize(static_cast<std::size_t>(pairs.n));
    for (Elt xx = 0; xx < k; ++xx)
        for (Elt mm = 0; mm < k; ++mm)
            embed.map[static_cast<std::size_t>(xx) * k + mm] =
                g.op(t.m.elems[mm], gamma[xx]);
    if (!is_bijection(embed.map, g.n) || !is_homomorphism(pairs, g, embed))
        throw ValidationError("the reconstruction does not rebuild the ambient group");
    return out;
}

MatchedPairBraces make_matched_pair_braces(SkewBrace x, SkewBrace y,
                                           std::vector<GroupMorphism> alpha,
                                           std::vector<GroupMorphism> beta) {
    if (static_cast<int>(alpha.size()) != x.size() || static_cast<int>(beta.size()) != y.size())
        throw ValidationError("need one action map per element on each side");
    for (Elt a = 0; a < x.size(); ++a)
        if (!is_bijection(alpha[a].map, y.size()) || !is_homomorphism(y.add, y.add, alpha[a]))
            throw NotAutomorphism(a);
    for (Elt b = 0; b < y.size(); ++b)
        if (!is_bijection(beta[b].map, x.size()) || !is_homomorphism(x.add, x.add, beta[b]))
            throw NotAutomorphism(b);
    for (Elt a = 0; a < x.size(); ++a)
        for (Elt a2 = 0; a2 < x.size(); ++a2)
            if (alpha[x.mul.op(a, a2)].map != compose(alpha[a], alpha[a2]).map)
                throw MatchedBraceLawFailure("alpha-homomorphism", a, a2);
    for (Elt b = 0; b < y.size(); ++b)
        for (Elt b2 = 0; b2 < y.size(); ++b2)
            if (beta[y.mul.op(b, b2)].map != compose(beta[b], beta[b2]).map)
                throw MatchedBraceLawFailure("beta-homomorphism", b, b2);

    std::vector<GroupMorphism> alpha_inv, beta_inv;
    for (const GroupMorphism& f : alpha) alpha_inv.push_back(inverse(f));
    for (const GroupMorphism& f : beta) beta_inv.push_back(inverse(f));

    for (Elt a = 0; a < x.size(); ++a)
        for (Elt b = 0; b < y.size(); ++b) {
            const Elt b2 = alpha[a](b);
            const Elt a2 = beta_inv[b2](a);
            for (Elt v = 0; v < x.size(); ++v)
                if (x.lambda(a, beta[b](v)) != beta[b2](x.lambda(a2, v)))
                    throw MatchedBraceLawFailure("lambda-beta", a, b);
        }
    for (Elt a = 0; a < x.size(); ++a)
        for (Elt b = 0; b < y.size(); ++b) {
            const Elt a2 = beta[b](a);
            const Elt b2 = alpha_inv[a2](b);
            for (Elt w = 0; w < y.size(); ++w)
                if (y.lambda(b, alpha[a](w)) != alpha[a2](y.lambda(b2, w)))
                    throw MatchedBraceLawFailure("lambda-alpha", a, b);
        }
    return MatchedPairBraces{std::move(x), std::move(y), std::move(alpha), std::move(beta)};
}

SkewBrace biproduct_brace(const MatchedPairBraces& p) {
    const int xn = p.x.size(), yn = p.y.size();
    std::vector<GroupMorphism> alpha_inv, beta_inv;
    for (const GroupMorphism& f : p.alpha) alpha_inv.push_back(inverse(f));
    for (const GroupMorphism& f : p.beta) beta_inv.push_back(inverse(f));

    // The splitting identities behind the pair circle operation; they follow
    // from the exchange laws, so a failure here means a broken input value.
    for (Elt a = 0; a < xn; ++a)
        for (Elt b = 0; b < yn; ++b) {
            for (Elt w = 0; w < yn; ++w)
                if (p.alpha[a](p.y.mul.op(alpha_inv[a](b), w)) !=
                    p.y.mul.op(b, p.alpha[beta_inv[b](a)](w)))
                    throw MatchedBraceLawFailure("alpha-splitting", a, b);
            for (Elt v = 0; v < xn; ++v)
                if (p.beta[b](p.x.mul.op(beta_inv[b](a), v)) !=
                    p.x.mul.op(a, p.beta[alpha_inv[a](b)](v)))
                    throw MatchedBraceLawFailure("beta-splitting", a, b);
        }

    const FiniteGroup add = direct_product(p.x.add, p.y.add);
    std::vector<Elt> mul(static_cast<std::size_t>(add.n) * add.n);
    for (Elt a = 0; a < xn; ++a)
        for (Elt b = 0; b < yn; ++b)
            for (Elt a2 = 0; a2 < xn; ++a2)
                for (Elt b2 = 0; b2 < yn; ++b2)
                    mul[(static_cast<std::size_t>(a) * yn + b) * add.n + a2 * yn + b2] =
                        static_cast<Elt>(p.beta[b](p.x.mul.op(beta_inv[b](a), a2)) * yn +
                                         p.alpha[a](p.y.mul.op(alpha_inv[a](b), b2)));
    return make_skew_brace(add.n, add.table, std::move(mul), pair_labels(p.x.add, p.y.add));
}

}  // namespace braceforge
