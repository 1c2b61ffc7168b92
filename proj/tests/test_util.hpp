#ifndef BRACEFORGE_TESTS_TEST_UTIL_HPP
#define BRACEFORGE_TESTS_TEST_UTIL_HPP

// Small independent builders used as oracles.  They construct expected
// groups from first principles (modular arithmetic, permutation closure,
// explicit unit tables) so the library under test is exercised against
// structures it did not produce itself.

#include <map>
#include <set>
#include <vector>

#include "braceforge/finite_group.hpp"

namespace testutil {

using braceforge::Elt;
using braceforge::FiniteGroup;

// Permutations as image arrays; compose(p, q) applies q first.
using Perm = std::vector<int>;

inline Perm pcompose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
    return r;
}

inline Perm pidentity(int deg) {
    Perm p(deg);
    for (int i = 0; i < deg; ++i) p[i] = i;
    return p;
}

// Builds a permutation of the given degree from disjoint cycles in 0-based
// point labels.
inline Perm from_cycles(int deg, const std::vector<std::vector<int>>& cycles) {
    Perm p = pidentity(deg);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) p[c[i]] = c[(i + 1) % c.size()];
    return p;
}

// Closure of the generators, elements sorted lexicographically (the identity
// sorts first), Cayley table by composition.
inline FiniteGroup group_from_perms(const std::vector<Perm>& gens) {
    std::set<Perm> seen(gens.begin(), gens.end());
    seen.insert(pidentity(static_cast<int>(gens.at(0).size())));
    std::vector<Perm> work(seen.begin(), seen.end());
    while (!work.empty()) {
        Perm p = std::move(work.back());
        work.pop_back();
        for (const Perm& g : gens) {
            for (const Perm& q : {pcompose(p, g), pcompose(g, p)})
                if (seen.insert(q).second) work.push_back(q);
        }
    }
    std::vector<Perm> elems(seen.begin(), seen.end());
    std::map<Perm, Elt> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elt>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<Elt> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = index.at(pcompose(elems[a], elems[b]));
    return braceforge::group_from_table(n, std::move(table));
}

inline FiniteGroup make_cyclic(int n) {
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>((a + b) % n);
    return braceforge::group_from_table(n, std::move(t));
}

// Dihedral group of order 2m on pairs (i, e) = r^i s^e, index e*m + i.
inline FiniteGroup make_dihedral(int m) {
    const int n = 2 * m;
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    for (int e = 0; e < 2; ++e)
        for (int i = 0; i < m; ++i)
            for (int d = 0; d < 2; ++d)
                for (int j = 0; j < m; ++j) {
                    const int k = ((e ? i - j : i + j) % m + m) % m;
                    t[static_cast<std::size_t>(e * m + i) * n + (d * m + j)] =
                        static_cast<Elt>((e ^ d) * m + k);
                }
    return braceforge::group_from_table(n, std::move(t));
}

// Quaternion group on signed units, ordered 1, -1, i, -i, j, -j, k, -k.
inline FiniteGroup make_quaternion() {
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    std::vector<Elt> t(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
            const int u = unit[ua][ub];
            const int s = sa ^ sb ^ sign[ua][ub];
            t[static_cast<std::size_t>(a) * 8 + b] = static_cast<Elt>(2 * u + s);
        }
    return braceforge::group_from_table(8, std::move(t));
}

inline FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const int n = a.n * b.n;
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    auto idx = [&](int x, int y) { return x * b.n + y; };
    for (int x1 = 0; x1 < a.n; ++x1)
        for (int y1 = 0; y1 < b.n; ++y1)
            for (int x2 = 0; x2 < a.n; ++x2)
                for (int y2 = 0; y2 < b.n; ++y2)
                    t[static_cast<std::size_t>(idx(x1, y1)) * n + idx(x2, y2)] =
                        static_cast<Elt>(idx(a.op(static_cast<Elt>(x1), static_cast<Elt>(x2)),
                                             b.op(static_cast<Elt>(y1), static_cast<Elt>(y2))));
    return braceforge::group_from_table(n, std::move(t));
}

inline FiniteGroup make_sym3() {
    return group_from_perms({from_cycles(3, {{0, 1}}), from_cycles(3, {{0, 1, 2}})});
}

inline FiniteGroup make_alt4() {
    return group_from_perms({from_cycles(4, {{0, 1}, {2, 3}}), from_cycles(4, {{0, 1, 2}})});
}

inline FiniteGroup make_klein() {
    return make_direct_product(make_cyclic(2), make_cyclic(2));
}

}  // namespace testutil

#endif
