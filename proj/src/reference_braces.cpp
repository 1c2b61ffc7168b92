#include "braceforge/reference_braces.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "braceforge/named_groups.hpp"

namespace braceforge {

namespace {

using Perm = std::vector<int>;

// Applies p first, then q. The order-12 transport data below was computed
// in this convention, so both tables of that brace use it.
Perm compose_lr(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
    return r;
}

Perm from_cycles(int deg, const std::vector<std::vector<int>>& cycles) {
    Perm p(static_cast<std::size_t>(deg));
    std::iota(p.begin(), p.end(), 0);
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i)
            p[static_cast<std::size_t>(c[i])] = c[(i + 1) % c.size()];
    return p;
}

// Cycle notation on 1-based points, letters from the tenth point on.
std::string cycle_label(const Perm& p) {
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == static_cast<int>(i)) continue;
        out += '(';
        std::size_t j = i;
        do {
            seen[j] = true;
            out += j < 9 ? static_cast<char>('1' + j) : static_cast<char>('a' + j - 9);
            j = static_cast<std::size_t>(p[j]);
        } while (j != i);
        out += ')';
    }
    return out.empty() ? "id" : out;
}

std::vector<Perm> sorted_perms(int deg, bool even_only) {
    Perm p(static_cast<std::size_t>(deg));
    std::iota(p.begin(), p.end(), 0);
    std::vector<Perm> out;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inversions;
        if (!even_only || inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

int rank_of(const std::vector<Perm>& all, const Perm& p) {
    const auto it = std::find(all.begin(), all.end(), p);
    if (it == all.end()) throw ValidationError("permutation left the listed group");
    return static_cast<int>(it - all.begin());
}

// Quaternion units 1, -1, i, -i, j, -j, k, -k at indices 0..7; the index is
// twice the unit letter plus the sign bit.
FiniteGroup quaternion_units() {
    constexpr std::array<std::array<int, 4>, 4> unit = {
        {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
    constexpr std::array<std::array<int, 4>, 4> flip = {
        {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}}};
    std::vector<Elt> table(64);
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const int ua = a / 2, sa = a % 2, ub = b / 2, sb = b % 2;
            const int u = unit[ua][ub];
            const int s = sa ^ sb ^ flip[ua][ub];
            table[static_cast<std::size_t>(a) * 8 + b] = static_cast<Elt>(2 * u + s);
        }
    return group_from_table(8, std::move(table),
                            {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

}  // namespace

SkewBrace symmetric3_cyclic6_brace() {
    FiniteGroup s3 = symmetric(3);
    const auto perms = sorted_perms(3, false);
    for (int a = 0; a < 6; ++a) s3.labels.push_back(cycle_label(perms[static_cast<std::size_t>(a)]));

    // first transposition in the carrier order; it swaps the points 2, 3
    Elt t = 0;
    while (s3.element_order(t) != 2) ++t;
    GroupMorphism ident, conj;
    ident.map.resize(6);
    conj.map.resize(6);
    for (Elt x = 0; x < 6; ++x) {
        ident.map[x] = x;
        conj.map[x] = s3.conjugate(t, x);
    }
    std::vector<GroupMorphism> f(6);
    for (Elt a = 0; a < 6; ++a) f[a] = s3.element_order(a) == 2 ? conj : ident;
    return from_lambda(s3, f);
}

SkewBrace dihedral8_quaternion_brace() {
    FiniteGroup d8 = dihedral(4);
    d8.labels = {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    const FiniteGroup q8 = quaternion_units();

    // where each quaternion unit lands in the dihedral layout
    constexpr std::array<Elt, 8> to_d8 = {0, 2, 4, 6, 3, 1, 5, 7};
    std::array<Elt, 8> to_q8{};
    for (Elt q = 0; q < 8; ++q) to_q8[to_d8[q]] = q;

    std::vector<Elt> mul(64);
    for (Elt x = 0; x < 8; ++x)
        for (Elt y = 0; y < 8; ++y)
            mul[static_cast<std::size_t>(x) * 8 + y] = to_d8[q8.op(to_q8[x], to_q8[y])];
    return make_skew_brace(8, d8.table, std::move(mul), d8.labels);
}

SkewBrace alternating4_brace() {
    const auto a4 = sorted_perms(4, true);
    const int n = 12;
    std::vector<Elt> add(144);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            add[static_cast<std::size_t>(i) * n + j] = static_cast<Elt>(rank_of(
                a4, compose_lr(a4[static_cast<std::size_t>(i)], a4[static_cast<std::size_t>(j)])));

    // A twelve point permutation group carrying the circle structure, given
    // by one permutation per carrier element together with where it lands.
    struct Transport {
        std::vector<std::vector<int>> perm;   // cycles on the twelve points
        std::vector<std::vector<int>> image;  // cycles of the carrier element
    };
    const std::vector<Transport> transport = {
        {{}, {}},
        {{{0, 5}, {1, 2}, {3, 10}, {4, 11}, {6, 8}, {7, 9}}, {{0, 3}, {1, 2}}},
        {{{0, 3, 4}, {1, 6, 7}, {2, 8, 9}, {5, 10, 11}}, {{1, 2, 3}}},
        {{{0, 10, 4, 5, 3, 11}, {1, 8, 7, 2, 6, 9}}, {{0, 3, 2}}},
        {{{0, 4, 3}, {1, 7, 6}, {2, 9, 8}, {5, 11, 10}}, {{1, 3, 2}}},
        {{{0, 11, 3, 5, 4, 10}, {1, 9, 6, 2, 7, 8}}, {{0, 3, 1}}},
        {{{0, 2, 5, 1}, {3, 9, 10, 7}, {4, 8, 11, 6}}, {{0, 2}, {1, 3}}},
        {{{0, 1, 5, 2}, {3, 7, 10, 9}, {4, 6, 11, 8}}, {{0, 1}, {2, 3}}},
        {{{0, 9, 5, 7}, {1, 4, 2, 11}, {3, 8, 10, 6}}, {{0, 2, 1}}},
        {{{0, 7, 5, 9}, {1, 11, 2, 4}, {3, 6, 10, 8}}, {{0, 1, 3}}},
        {{{0, 8, 5, 6}, {1, 3, 2, 10}, {4, 9, 11, 7}}, {{0, 2, 3}}},
        {{{0, 6, 5, 8}, {1, 10, 2, 3}, {4, 7, 11, 9}}, {{0, 1, 2}}},
    };

    std::vector<Perm> g;
    std::vector<int> lands(static_cast<std::size_t>(n));
    std::vector<int> carrier_to_row(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        g.push_back(from_cycles(12, transport[static_cast<std::size_t>(k)].perm));
        lands[static_cast<std::size_t>(k)] =
            rank_of(a4, from_cycles(4, transport[static_cast<std::size_t>(k)].image));
        carrier_to_row[static_cast<std::size_t>(lands[static_cast<std::size_t>(k)])] = k;
    }

    std::vector<Elt> mul(144);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Perm prod = compose_lr(g[static_cast<std::size_t>(carrier_to_row[x])],
                                         g[static_cast<std::size_t>(carrier_to_row[y])]);
            int row = 0;
            while (g[static_cast<std::size_t>(row)] != prod) {
                ++row;
                if (row == n) throw ValidationError("permutation left the listed group");
            }
            mul[static_cast<std::size_t>(x) * n + y] =
                static_cast<Elt>(lands[static_cast<std::size_t>(row)]);
        }

    std::vector<std::string> labels;
    for (const auto& p : a4) labels.push_back(cycle_label(p));
    return make_skew_brace(n, std::move(add), std::move(mul), std::move(labels));
}

}  // namespace braceforge
