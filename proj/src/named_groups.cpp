#include "braceforge/named_groups.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace braceforge {

FiniteGroup cyclic(int n) {
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>((a + b) % n);
    return group_from_table(n, std::move(t));
}

FiniteGroup dihedral(int m) {
    if (m < 1) throw ValidationError("dihedral needs m >= 1");
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
    return group_from_table(n, std::move(t));
}

FiniteGroup dicyclic(int m) {
    if (m < 2) throw ValidationError("dicyclic needs m >= 2");
    const int n = 4 * m;
    const int c = 2 * m;
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    auto idx = [&](int i, int e) { return e * c + ((i % c + c) % c); };
    for (int e = 0; e < 2; ++e)
        for (int i = 0; i < c; ++i)
            for (int d = 0; d < 2; ++d)
                for (int j = 0; j < c; ++j) {
                    // a^i b^e * a^j b^d, using b a^j = a^-j b and b^2 = a^m.
                    int k = e ? i - j : i + j;
                    int shift = (e && d) ? m : 0;
                    t[static_cast<std::size_t>(idx(i, e)) * n + idx(j, d)] =
                        static_cast<Elt>(idx(k + shift, e ^ d));
                }
    return group_from_table(n, std::move(t));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
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
    return group_from_table(n, std::move(t));
}

namespace {

bool is_automorphism_of(const FiniteGroup& g, const GroupMorphism& m) {
    if (static_cast<int>(m.map.size()) != g.n) return false;
    std::vector<char> hit(g.n, 0);
    for (Elt v : m.map) {
        if (v >= g.n || hit[v]) return false;
        hit[v] = 1;
    }
    return is_homomorphism(g, g, m);
}

int morphism_order(const GroupMorphism& m) {
    GroupMorphism p = m;
    int ord = 1;
    auto is_id = [](const GroupMorphism& x) {
        for (std::size_t i = 0; i < x.map.size(); ++i)
            if (x.map[i] != i) return false;
        return true;
    };
    while (!is_id(p)) {
        p = compose(p, m);
        ++ord;
        if (ord > static_cast<int>(m.map.size())) throw ValidationError("map is not invertible");
    }
    return ord;
}

}  // namespace

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMorphism>& phi) {
    if (static_cast<int>(phi.size()) != h.n)
        throw ValidationError("semidirect action must assign one map per element of H");
    for (int x = 0; x < h.n; ++x)
        if (!is_automorphism_of(n, phi[x]))
            throw ValidationError("semidirect action at H element " + std::to_string(x) +
                                  " is not an automorphism of N");
    for (Elt x = 0; x < h.n; ++x)
        for (Elt y = 0; y < h.n; ++y)
            if (compose(phi[x], phi[y]).map != phi[h.op(x, y)].map)
                throw ValidationError("semidirect action is not a homomorphism into Aut(N)");

    const int total = n.n * h.n;
    std::vector<Elt> t(static_cast<std::size_t>(total) * total);
    auto idx = [&](int x, int a) { return a * n.n + x; };
    for (int a = 0; a < h.n; ++a)
        for (int x = 0; x < n.n; ++x)
            for (int b = 0; b < h.n; ++b)
                for (int y = 0; y < n.n; ++y)
                    t[static_cast<std::size_t>(idx(x, a)) * total + idx(y, b)] = static_cast<Elt>(
                        idx(n.op(static_cast<Elt>(x), phi[a].map[y]),
                            h.op(static_cast<Elt>(a), static_cast<Elt>(b))));
    return group_from_table(total, std::move(t));
}

FiniteGroup semidirect_cyclic(const FiniteGroup& n, int k, const GroupMorphism& alpha) {
    if (!is_automorphism_of(n, alpha))
        throw ValidationError("semidirect twist is not an automorphism");
    if (k < 1 || k % morphism_order(alpha) != 0)
        throw ValidationError("twist order must divide the cyclic factor");
    std::vector<GroupMorphism> phi(k);
    phi[0].map.resize(n.n);
    std::iota(phi[0].map.begin(), phi[0].map.end(), Elt{0});
    for (int i = 1; i < k; ++i) phi[i] = compose(alpha, phi[i - 1]);
    return semidirect_product(n, cyclic(k), phi);
}

FiniteGroup from_permutations(int degree, const std::vector<std::vector<Elt>>& gens) {
    std::vector<Elt> id(degree);
    std::iota(id.begin(), id.end(), Elt{0});
    std::set<std::vector<Elt>> seen{id};
    std::vector<std::vector<Elt>> work{id};
    auto pcomp = [&](const std::vector<Elt>& p, const std::vector<Elt>& q) {
        std::vector<Elt> r(degree);
        for (int i = 0; i < degree; ++i) r[i] = p[q[i]];
        return r;
    };
    while (!work.empty()) {
        auto p = std::move(work.back());
        work.pop_back();
        for (const auto& g : gens) {
            for (auto q : {pcomp(p, g), pcomp(g, p)})
                if (seen.insert(q).second) work.push_back(std::move(q));
        }
    }
    std::vector<std::vector<Elt>> elems(seen.begin(), seen.end());
    std::map<std::vector<Elt>, Elt> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elt>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a) * n + b] = index.at(pcomp(elems[a], elems[b]));
    return group_from_table(n, std::move(t));
}

namespace {

bool perm_parity_even(const std::vector<Elt>& p) {
    int swaps = 0;
    std::vector<char> seen(p.size(), 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i, len = 0;
        while (!seen[j]) {
            seen[j] = 1;
            j = p[j];
            ++len;
        }
        swaps += static_cast<int>(len) - 1;
    }
    return swaps % 2 == 0;
}

FiniteGroup perm_group_all(int k, bool even_only) {
    std::vector<Elt> p(k);
    std::iota(p.begin(), p.end(), Elt{0});
    std::vector<std::vector<Elt>> elems;
    do {
        if (!even_only || perm_parity_even(p)) elems.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::map<std::vector<Elt>, Elt> index;
    for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<Elt>(i);
    const int n = static_cast<int>(elems.size());
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<Elt> r(k);
            for (int i = 0; i < k; ++i) r[i] = elems[a][elems[b][i]];
            t[static_cast<std::size_t>(a) * n + b] = index.at(r);
        }
    return group_from_table(n, std::move(t));
}

}  // namespace

FiniteGroup symmetric(int k) {
    if (k < 1 || k > 5) throw ValidationError("symmetric(k) supports 1 <= k <= 5");
    return perm_group_all(k, false);
}

FiniteGroup alternating(int k) {
    if (k < 3 || k > 5) throw ValidationError("alternating(k) supports 3 <= k <= 5");
    return perm_group_all(k, true);
}

FiniteGroup special_linear_2_3() {
    // All 2x2 matrices over F3 with determinant 1, enumerated lexicographically.
    std::vector<std::array<int, 4>> mats;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c)
                for (int d = 0; d < 3; ++d)
                    if (((a * d - b * c) % 3 + 3) % 3 == 1) mats.push_back({a, b, c, d});
    std::map<std::array<int, 4>, Elt> index;
    for (std::size_t i = 0; i < mats.size(); ++i) index[mats[i]] = static_cast<Elt>(i);
    const int n = static_cast<int>(mats.size());
    std::vector<Elt> t(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const auto& m = mats[x];
            const auto& k = mats[y];
            std::array<int, 4> p = {(m[0] * k[0] + m[1] * k[2]) % 3, (m[0] * k[1] + m[1] * k[3]) % 3,
                                    (m[2] * k[0] + m[3] * k[2]) % 3, (m[2] * k[1] + m[3] * k[3]) % 3};
            t[static_cast<std::size_t>(x) * n + y] = index.at(p);
        }
    return group_from_table(n, std::move(t));
}

FiniteGroup projective_special_linear_2_7() {
    // Action on the projective line over F7: points 0..6 and infinity = 7,
    // generated by z -> z + 1 and z -> -1/z.
    std::vector<Elt> shift = {1, 2, 3, 4, 5, 6, 0, 7};
    std::vector<Elt> flip(8);
    flip[0] = 7;
    flip[7] = 0;
    const int inv7[7] = {0, 1, 4, 5, 2, 3, 6};
    for (int z = 1; z < 7; ++z) flip[z] = static_cast<Elt>((7 - inv7[z]) % 7);
    return from_permutations(8, {shift, flip});
}

GroupMorphism inversion_map(const FiniteGroup& g) {
    GroupMorphism m;
    m.map = g.inv;
    return m;
}

GroupMorphism power_map(const FiniteGroup& cyclic_group, int u) {
    GroupMorphism m;
    m.map.resize(cyclic_group.n);
    for (Elt a = 0; a < cyclic_group.n; ++a) m.map[a] = cyclic_group.power(a, u);
    return m;
}

namespace {

FiniteGroup abelian(const std::vector<int>& factors) {
    FiniteGroup g = cyclic(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, cyclic(factors[i]));
    return g;
}

// The Pauli group of order 16: central product of D8 and C4, realised as
// (D8 x C4) / <(r^2, c^2)>.
FiniteGroup pauli_16() {
    FiniteGroup p = direct_product(dihedral(4), cyclic(4));
    // r^2 is index 2 in the dihedral layout, c^2 is index 2 in C4, and the
    // direct product indexes pairs as x * 4 + y.
    Subgroup z = closure(p, {static_cast<Elt>(2 * 4 + 2)});
    return quotient(p, z).group;
}

// C3 x| D8 where rotations invert and reflections act trivially (the
// rotation-parity homomorphism D8 -> Aut(C3)).
FiniteGroup c3_by_d8() {
    FiniteGroup c3 = cyclic(3);
    FiniteGroup d8 = dihedral(4);
    GroupMorphism id;
    id.map = {0, 1, 2};
    GroupMorphism inv = inversion_map(c3);
    std::vector<GroupMorphism> phi(8);
    for (Elt x = 0; x < 8; ++x) phi[x] = (x % 4) % 2 ? inv : id;
    return semidirect_product(c3, d8, phi);
}

GroupMorphism klein_swap(const FiniteGroup& klein) {
    // Swap the two coordinates of C2 x C2 in the direct product indexing.
    (void)klein;
    GroupMorphism m;
    m.map = {0, 2, 1, 3};
    return m;
}

GroupMorphism shear_c3c3() {
    // (x, y) -> (x, x + y) on C3 x C3 with index x * 3 + y; has order 3.
    GroupMorphism m;
    m.map.resize(9);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) m.map[x * 3 + y] = static_cast<Elt>(x * 3 + (x + y) % 3);
    return m;
}

std::vector<NamedGroup> build_catalogue(int n) {
    std::vector<NamedGroup> out;
    auto add = [&](const std::string& name, FiniteGroup g) {
        if (g.n != n) throw ValidationError("catalogue entry " + name + " has wrong order");
        out.push_back({name, std::move(g)});
    };
    switch (n) {
        case 1: add("C1", cyclic(1)); break;
        case 2: add("C2", cyclic(2)); break;
        case 3: add("C3", cyclic(3)); break;
        case 4:
            add("C4", cyclic(4));
            add("C2xC2", abelian({2, 2}));
            break;
        case 5: add("C5", cyclic(5)); break;
        case 6:
            add("S3", symmetric(3));
            add("C6", cyclic(6));
            break;
        case 7: add("C7", cyclic(7)); break;
        case 8:
            add("C8", cyclic(8));
            add("C4xC2", abelian({4, 2}));
            add("C4:C2", dihedral(4));
            add("Q8", dicyclic(2));
            add("C2^3", abelian({2, 2, 2}));
            break;
        case 9:
            add("C9", cyclic(9));
            add("C3xC3", abelian({3, 3}));
            break;
        case 10:
            add("D10", dihedral(5));
            add("C10", cyclic(10));
            break;
        case 11: add("C11", cyclic(11)); break;
        case 12:
            add("C3:C4", semidirect_cyclic(cyclic(3), 4, inversion_map(cyclic(3))));
            add("C12", cyclic(12));
            add("A4", alternating(4));
            add("C6:C2", dihedral(6));
            add("C6xC2", abelian({6, 2}));
            break;
        case 13: add("C13", cyclic(13)); break;
        case 14:
            add("D14", dihedral(7));
            add("C14", cyclic(14));
            break;
        case 15: add("C15", cyclic(15)); break;
        case 16: {
            FiniteGroup c8 = cyclic(8);
            add("C16", cyclic(16));
            add("C4xC4", abelian({4, 4}));
            add("(C2xC2):C4", semidirect_cyclic(abelian({2, 2}), 4, klein_swap(abelian({2, 2}))));
            add("C4:C4", semidirect_cyclic(cyclic(4), 4, inversion_map(cyclic(4))));
            add("C8xC2", abelian({8, 2}));
            add("C8:C2", semidirect_cyclic(c8, 2, power_map(c8, 5)));
            add("D16", dihedral(8));
            add("SD16", semidirect_cyclic(c8, 2, power_map(c8, 3)));
            add("Q16", dicyclic(4));
            add("C4xC2xC2", abelian({4, 2, 2}));
            add("D8xC2", direct_product(dihedral(4), cyclic(2)));
            add("Q8xC2", direct_product(dicyclic(2), cyclic(2)));
            add("D8*C4", pauli_16());
            add("C2^4", abelian({2, 2, 2, 2}));
            break;
        }
        case 17: add("C17", cyclic(17)); break;
        case 18:
            add("D18", dihedral(9));
            add("C18", cyclic(18));
            add("C3xS3", direct_product(cyclic(3), symmetric(3)));
            add("(C3xC3):C2", semidirect_cyclic(abelian({3, 3}), 2, inversion_map(abelian({3, 3}))));
            add("C6xC3", abelian({6, 3}));
            break;
        case 19: add("C19", cyclic(19)); break;
        case 20:
            add("Dic5", dicyclic(5));
            add("C20", cyclic(20));
            add("C5:C4", semidirect_cyclic(cyclic(5), 4, power_map(cyclic(5), 2)));
            add("D20", dihedral(10));
            add("C10xC2", abelian({10, 2}));
            break;
        case 21:
            add("C7:C3", semidirect_cyclic(cyclic(7), 3, power_map(cyclic(7), 2)));
            add("C21", cyclic(21));
            break;
        case 22:
            add("D22", dihedral(11));
            add("C22", cyclic(22));
            break;
        case 23: add("C23", cyclic(23)); break;
        case 24: {
            FiniteGroup dic3 = semidirect_cyclic(cyclic(3), 4, inversion_map(cyclic(3)));
            add("C3:C8", semidirect_cyclic(cyclic(3), 8, inversion_map(cyclic(3))));
            add("C24", cyclic(24));
            add("SL23", special_linear_2_3());
            add("Dic6", dicyclic(6));
            add("C4xS3", direct_product(cyclic(4), symmetric(3)));
            add("D24", dihedral(12));
            add("(C3:C4)xC2", direct_product(dic3, cyclic(2)));
            add("C3:D8", c3_by_d8());
            add("C12xC2", abelian({12, 2}));
            add("D8xC3", direct_product(dihedral(4), cyclic(3)));
            add("Q8xC3", direct_product(dicyclic(2), cyclic(3)));
            add("S4", symmetric(4));
            add("A4xC2", direct_product(alternating(4), cyclic(2)));
            add("S3xC2xC2", direct_product(symmetric(3), abelian({2, 2})));
            add("C6xC2xC2", abelian({6, 2, 2}));
            break;
        }
        case 25:
            add("C25", cyclic(25));
            add("C5xC5", abelian({5, 5}));
            break;
        case 26:
            add("D26", dihedral(13));
            add("C26", cyclic(26));
            break;
        case 27:
            add("C27", cyclic(27));
            add("C9xC3", abelian({9, 3}));
            add("(C3xC3):C3", semidirect_cyclic(abelian({3, 3}), 3, shear_c3c3()));
            add("C9:C3", semidirect_cyclic(cyclic(9), 3, power_map(cyclic(9), 4)));
            add("C3^3", abelian({3, 3, 3}));
            break;
        case 28:
            add("C7:C4", dicyclic(7));
            add("C28", cyclic(28));
            add("D28", dihedral(14));
            add("C14xC2", abelian({14, 2}));
            break;
        case 29: add("C29", cyclic(29)); break;
        case 30:
            add("C5xS3", direct_product(cyclic(5), symmetric(3)));
            add("C3xD10", direct_product(cyclic(3), dihedral(5)));
            add("D30", dihedral(15));
            add("C30", cyclic(30));
            break;
        case 31: add("C31", cyclic(31)); break;
        default:
            throw ValidationError("catalogue covers orders 1.." +
                                  std::to_string(kCatalogueMaxOrder) + " only");
    }
    return out;
}

}  // namespace

const std::vector<NamedGroup>& catalogue_order(int n) {
    if (n < 1 || n > kCatalogueMaxOrder)
        throw ValidationError("catalogue covers orders 1.." +
                              std::to_string(kCatalogueMaxOrder) + " only");
    static std::mutex mu;
    static std::map<int, std::vector<NamedGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_catalogue(n)).first;
    return it->second;
}

std::optional<std::string> catalogue_name(const FiniteGroup& g) {
    if (g.n < 1 || g.n > kCatalogueMaxOrder) return std::nullopt;
    for (const auto& e : catalogue_order(g.n))
        if (are_isomorphic(e.group, g)) return e.name;
    throw ValidationError("group of order " + std::to_string(g.n) +
                          " matches no catalogue entry");
}

FiniteGroup group_by_name(const std::string& name) {
    for (int n = 1; n <= kCatalogueMaxOrder; ++n)
        for (const auto& e : catalogue_order(n))
            if (e.name == name) return e.group;
    if (name == "A5") return alternating(5);
    if (name == "PSL27") return projective_special_linear_2_7();
    throw ValidationError("unknown group name: " + name);
}

}  // namespace braceforge
