#include "braceforge/ring_constructions.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "io_detail.hpp"

namespace braceforge {

namespace {

// Multiplication in F2[y] modulo an irreducible polynomial, elements and the
// modulus as bit vectors of coefficients.
Elt binary_field_mul(int a, int b, int deg, int modulus) {
    int res = 0;
    while (b != 0) {
        if (b & 1) res ^= a;
        b >>= 1;
        a <<= 1;
        if (a & (1 << deg)) a ^= modulus;
    }
    return static_cast<Elt>(res);
}

std::vector<Elt> positions(const Subgroup& s, int n) {
    std::vector<Elt> pos(static_cast<std::size_t>(n), kNoElt);
    for (std::size_t i = 0; i < s.elems.size(); ++i) pos[s.elems[i]] = static_cast<Elt>(i);
    return pos;
}

std::vector<std::string> restricted_labels(const FiniteGroup& g, const Subgroup& s) {
    if (g.labels.empty()) return {};
    std::vector<std::string> out;
    out.reserve(s.elems.size());
    for (Elt e : s.elems) out.push_back(g.labels[e]);
    return out;
}

// Powers a, a^2, ... must reach 0 within the carrier size, otherwise they
// cycle without it and a has no circle inverse.
void nil_scan(const FiniteRing& r, const std::vector<Elt>& elems) {
    for (Elt a : elems) {
        Elt p = a;
        int steps = 0;
        while (p != 0 && steps <= r.size()) {
            p = r.mul(p, a);
            ++steps;
        }
        if (p != 0) throw NotCircleInvertible(a);
    }
}

void check_two_sided(const FiniteRing& r, const std::string& what) {
    if (r.near_ring)
        throw ValidationError(what + " needs both distributive laws, not a near-ring");
}

std::string pair_str(Elt a, Elt b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::string triple_str(Elt a, Elt b, Elt c) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
           ")";
}

}  // namespace

GaloisField galois_field(int q) {
    GaloisField f;
    f.q = q;
    const auto fill = [&](auto sum, auto prod) {
        f.add.resize(static_cast<std::size_t>(q) * q);
        f.mul.resize(static_cast<std::size_t>(q) * q);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                f.add[static_cast<std::size_t>(a) * q + b] = sum(a, b);
                f.mul[static_cast<std::size_t>(a) * q + b] = prod(a, b);
            }
    };
    switch (q) {
        case 2:
        case 3:
        case 5:
        case 7:
            fill([q](int a, int b) { return static_cast<Elt>((a + b) % q); },
                 [q](int a, int b) { return static_cast<Elt>((a * b) % q); });
            return f;
        case 4:  // F2[y] / (y^2 + y + 1)
            fill([](int a, int b) { return static_cast<Elt>(a ^ b); },
                 [](int a, int b) { return binary_field_mul(a, b, 2, 0b111); });
            return f;
        case 8:  // F2[y] / (y^3 + y + 1)
            fill([](int a, int b) { return static_cast<Elt>(a ^ b); },
                 [](int a, int b) { return binary_field_mul(a, b, 3, 0b1011); });
            return f;
        default:
            throw ValidationError("field size " + std::to_string(q) +
                                  " is outside the supported range {2, 3, 4, 5, 7, 8}");
    }
}

FiniteRing make_finite_ring(FiniteGroup add, std::vector<Elt> mult, bool unital,
                            bool near_ring) {
    const int n = add.n;
    if (static_cast<long>(mult.size()) != static_cast<long>(n) * n)
        throw ValidationError("multiplication table size does not match the carrier");
    for (Elt v : mult)
        if (v >= n) throw ValidationError("multiplication entry out of range");

    FiniteRing r;
    r.add = std::move(add);
    r.mult = std::move(mult);
    r.unital = unital;
    r.near_ring = near_ring;

    if (!near_ring) {
        for (Elt a = 0; a < n; ++a)
            for (Elt b = static_cast<Elt>(a + 1); b < n; ++b)
                if (r.add.op(a, b) != r.add.op(b, a))
                    throw ValidationError("ring addition must be abelian: witnesses " +
                                          pair_str(a, b));
    }

    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c) {
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    throw ValidationError("multiplication is not associative at " +
                                          triple_str(a, b, c));
                if (r.mul(a, r.add.op(b, c)) != r.add.op(r.mul(a, b), r.mul(a, c)))
                    throw ValidationError("left distributivity fails at " +
                                          triple_str(a, b, c));
                if (!near_ring &&
                    r.mul(r.add.op(a, b), c) != r.add.op(r.mul(a, c), r.mul(b, c)))
                    throw ValidationError("right distributivity fails at " +
                                          triple_str(a, b, c));
            }

    if (unital) {
        r.one = kNoElt;
        for (Elt e = 0; e < n; ++e) {
            bool ok = true;
            for (Elt x = 0; x < n && ok; ++x)
                ok = r.mul(e, x) == x && r.mul(x, e) == x;
            if (ok) {
                r.one = e;
                break;
            }
        }
        if (r.one == kNoElt)
            throw ValidationError("no two sided multiplicative identity in the table");
    }
    return r;
}

FiniteGroup circle_group(const FiniteRing& r, const Subgroup& s) {
    check_two_sided(r, "the circle operation");
    if (!is_subgroup(r.add, s))
        throw ValidationError("the subset is not an additive subgroup");
    for (Elt a : s.elems)
        for (Elt b : s.elems)
            if (!s.contains(r.mul(a, b)))
                throw ValidationError("the subset is not closed under multiplication at " +
                                      pair_str(a, b));
    nil_scan(r, s.elems);

    const int k = s.size();
    const auto pos = positions(s, r.size());
    std::vector<Elt> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Elt v = pos[r.circle(s.elems[i], s.elems[j])];
            if (v == kNoElt)
                throw ValidationError("the circle operation escapes the subset at " +
                                      pair_str(s.elems[i], s.elems[j]));
            table[static_cast<std::size_t>(i) * k + j] = v;
        }
    return group_from_table(k, std::move(table), restricted_labels(r.add, s));
}

FiniteGroup circle_group(const FiniteRing& r) {
    Subgroup all;
    all.elems.resize(static_cast<std::size_t>(r.size()));
    for (int i = 0; i < r.size(); ++i) all.elems[i] = static_cast<Elt>(i);
    return circle_group(r, all);
}

ExactFactorization ring_exact_factorization(const FiniteRing& r, const Subgroup& s,
                                            const Subgroup& i) {
    check_two_sided(r, "the circle operation");
    const int n = r.size();

    if (!is_subgroup(r.add, s))
        throw ValidationError("the s factor is not an additive subgroup");
    for (Elt a : s.elems)
        for (Elt b : s.elems)
            if (!s.contains(r.mul(a, b)))
                throw ValidationError("the s factor is not closed under multiplication at " +
                                      pair_str(a, b));
    nil_scan(r, s.elems);

    if (!is_subgroup(r.add, i))
        throw ValidationError("the i factor is not an additive subgroup");
    for (Elt x = 0; x < n; ++x)
        for (Elt b : i.elems)
            if (!i.contains(r.mul(x, b)))
                throw ValidationError("the i factor is not a left ideal: x b escapes at " +
                                      pair_str(x, b));
    nil_scan(r, i.elems);

    for (Elt a : s.elems)
        if (a != 0 && i.contains(a))
            throw ValidationError("the factors meet outside 0 at element " +
                                  std::to_string(a));
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (Elt a : s.elems)
        for (Elt b : i.elems) hit[r.sum(a, b)] = 1;
    for (Elt v = 0; v < n; ++v)
        if (!hit[v])
            throw ValidationError("sums s + i miss element " + std::to_string(v) +
                                  " of the carrier");

    std::vector<Elt> table(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            table[static_cast<std::size_t>(a) * n + b] = r.circle(a, b);
    FiniteGroup circle = group_from_table(n, std::move(table), r.add.labels);
    return exact_factorization(circle, s, i);
}

SkewBrace construction_subgroup_brace(const FiniteRing& r, const Subgroup& m) {
    if (!r.unital)
        throw ValidationError("construction subgroups live in a unital near-ring");
    if (!is_subgroup(r.add, m))
        throw ValidationError("the subset is not an additive subgroup");

    const Elt one = r.one;
    const Elt neg_one = r.add.inv[one];
    // (1 + m)(1 + m') has to be 1 + m'' with m'' back in the subgroup, and
    // every 1 + m needs a two sided inverse of the same shape.
    for (Elt a : m.elems)
        for (Elt b : m.elems) {
            const Elt prod = r.mul(r.sum(one, a), r.sum(one, b));
            if (!m.contains(r.sum(neg_one, prod))) throw NotConstructionSubgroup(a, b);
        }
    for (Elt a : m.elems) {
        const Elt u = r.sum(one, a);
        bool inverted = false;
        for (Elt b : m.elems) {
            const Elt v = r.sum(one, b);
            if (r.mul(u, v) == one && r.mul(v, u) == one) {
                inverted = true;
                break;
            }
        }
        if (!inverted) throw NotConstructionSubgroup(a, a);
    }

    const int k = m.size();
    const auto pos = positions(m, r.size());
    std::vector<Elt> add_t(static_cast<std::size_t>(k) * k);
    std::vector<Elt> mul_t(static_cast<std::size_t>(k) * k);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            const Elt mi = m.elems[x], mj = m.elems[y];
            add_t[static_cast<std::size_t>(x) * k + y] = pos[r.sum(mi, mj)];
            const Elt v = pos[r.sum(mi, r.mul(r.sum(one, mi), mj))];
            if (v == kNoElt)
                throw ValidationError(
                    "the construction subgroup is not closed under its circle operation");
            mul_t[static_cast<std::size_t>(x) * k + y] = v;
        }
    return make_skew_brace(k, std::move(add_t), std::move(mul_t),
                           restricted_labels(r.add, m));
}

FiniteRing map_near_ring(const FiniteGroup& g, int max_maps) {
    const int n = g.n;
    long count = 1;
    for (int i = 0; i < n; ++i) {
        count *= n;
        if (count > max_maps) throw ResourceError("the map near-ring exceeds the table budget");
    }
    const int m = static_cast<int>(count);

    // Value tables in lexicographic order; the index of a table is its value
    // sequence read as a base n number, most significant value first.
    std::vector<std::vector<Elt>> maps(static_cast<std::size_t>(m));
    for (int idx = 0; idx < m; ++idx) {
        std::vector<Elt> tab(static_cast<std::size_t>(n));
        int rest = idx;
        for (int v = n - 1; v >= 0; --v) {
            tab[v] = static_cast<Elt>(rest % n);
            rest /= n;
        }
        maps[idx] = std::move(tab);
    }
    const auto index_of = [&](const std::vector<Elt>& tab) {
        long idx = 0;
        for (int v = 0; v < n; ++v) idx = idx * n + tab[v];
        return static_cast<Elt>(idx);
    };

    std::vector<Elt> add_t(static_cast<std::size_t>(m) * m);
    std::vector<Elt> mul_t(static_cast<std::size_t>(m) * m);
    std::vector<Elt> scratch(static_cast<std::size_t>(n));
    for (int f = 0; f < m; ++f)
        for (int h = 0; h < m; ++h) {
            for (int v = 0; v < n; ++v) scratch[v] = g.op(maps[f][v], maps[h][v]);
            add_t[static_cast<std::size_t>(f) * m + h] = index_of(scratch);
            for (int v = 0; v < n; ++v) scratch[v] = maps[h][maps[f][v]];
            mul_t[static_cast<std::size_t>(f) * m + h] = index_of(scratch);
        }
    return make_finite_ring(group_from_table(m, std::move(add_t)), std::move(mul_t),
                            /*unital=*/true, /*near_ring=*/true);
}

NilpotentAlgebra make_nilpotent_algebra(int q, int dim,
                                        const std::vector<std::array<int, 3>>& triples) {
    const GaloisField f = galois_field(q);
    if (dim < 1) throw ValidationError("the nilpotent part needs at least one basis vector");
    long carrier = 1;
    for (int i = 0; i <= dim; ++i) {
        carrier *= q;
        if (carrier > 4096) throw ResourceError("algebra carrier exceeds the table budget");
    }
    const int na = static_cast<int>(carrier);
    const int nn = na / q;  // q^dim, the size of N and the index of 1

    // sc[(i * dim + j) * dim + k] is the e_k coefficient of e_i e_j.
    std::vector<Elt> sc(static_cast<std::size_t>(dim) * dim * dim, 0);
    for (const auto& t : triples) {
        if (t[0] < 0 || t[0] >= dim || t[1] < 0 || t[1] >= dim || t[2] < 0 || t[2] >= dim)
            throw ValidationError("structure constant index out of range in (" +
                                  std::to_string(t[0]) + ", " + std::to_string(t[1]) +
                                  ", " + std::to_string(t[2]) + ")");
        Elt& c = sc[(static_cast<std::size_t>(t[0]) * dim + t[1]) * dim + t[2]];
        c = f.sum(c, 1);
    }

    // An element c + sum n_i e_i is packed base q with c the most
    // significant digit, so 0 is the zero element and q^dim is 1.
    const auto decode = [&](int v, std::vector<Elt>& digits) {
        for (int d = dim; d >= 0; --d) {
            digits[d] = static_cast<Elt>(v % q);
            v /= q;
        }
    };
    const auto encode = [&](const std::vector<Elt>& digits) {
        int v = 0;
        for (int d = 0; d <= dim; ++d) v = v * q + digits[d];
        return static_cast<Elt>(v);
    };

    std::vector<Elt> add_t(static_cast<std::size_t>(na) * na);
    std::vector<Elt> mul_t(static_cast<std::size_t>(na) * na);
    std::vector<Elt> da(dim + 1), db(dim + 1), dc(dim + 1);
    for (int a = 0; a < na; ++a) {
        decode(a, da);
        for (int b = 0; b < na; ++b) {
            decode(b, db);
            for (int d = 0; d <= dim; ++d) dc[d] = f.sum(da[d], db[d]);
            add_t[static_cast<std::size_t>(a) * na + b] = encode(dc);

            dc[0] = f.prod(da[0], db[0]);
            for (int k = 0; k < dim; ++k) {
                Elt v = f.sum(f.prod(da[0], db[k + 1]), f.prod(db[0], da[k + 1]));
                for (int i = 0; i < dim; ++i)
                    for (int j = 0; j < dim; ++j) {
                        const Elt c = sc[(static_cast<std::size_t>(i) * dim + j) * dim + k];
                        if (c != 0)
                            v = f.sum(v, f.prod(f.prod(da[i + 1], db[j + 1]), c));
                    }
                dc[k + 1] = v;
            }
            mul_t[static_cast<std::size_t>(a) * na + b] = encode(dc);
        }
    }

    NilpotentAlgebra alg;
    alg.q = q;
    alg.dim = dim;
    alg.commutative = true;
    for (int a = 0; a < na && alg.commutative; ++a)
        for (int b = 0; b < na; ++b)
            if (mul_t[static_cast<std::size_t>(a) * na + b] !=
                mul_t[static_cast<std::size_t>(b) * na + a]) {
                alg.commutative = false;
                break;
            }
    alg.ring = make_finite_ring(group_from_table(na, std::move(add_t)), std::move(mul_t),
                                /*unital=*/true, /*near_ring=*/false);
    alg.n_elems.resize(static_cast<std::size_t>(nn));
    for (int i = 0; i < nn; ++i) alg.n_elems[i] = static_cast<Elt>(i);

    // Left normed products of k factors from N, which by associativity cover
    // all k factor products. The powers of N descend strictly until they
    // vanish, so a nilpotent N is dead by power dim + 1.
    std::set<Elt> layer(alg.n_elems.begin(), alg.n_elems.end());
    int k = 1;
    while (!(layer.size() == 1 && *layer.begin() == 0)) {
        if (k > dim)
            throw ValidationError("the span of the basis vectors is not nilpotent");
        std::set<Elt> next;
        for (Elt a : layer)
            for (Elt b : alg.n_elems) next.insert(alg.ring.mul(a, b));
        layer = std::move(next);
        ++k;
    }
    alg.nu = k;
    return alg;
}

NilpotentAlgebra read_algebra(std::istream& in, const std::string& source) {
    io_detail::LineReader r{in, source};
    int q = -1, dim = -1;
    std::vector<std::array<int, 3>> triples;
    while (auto line = r.next()) {
        auto toks = io_detail::split_ws(*line);
        if (toks[0][0] == '#') continue;
        if (q < 0) {
            if (toks.size() != 2) r.fail("expected 'q dim' on the first data line");
            q = static_cast<int>(io_detail::parse_long(r, toks[0]));
            dim = static_cast<int>(io_detail::parse_long(r, toks[1]));
            continue;
        }
        if (toks.size() != 3) r.fail("expected a structure triple 'i j k'");
        std::array<int, 3> t{};
        for (int p = 0; p < 3; ++p) {
            const long v = io_detail::parse_long(r, toks[p]);
            if (v < 0 || v >= dim) r.fail("structure index " + toks[p] + " out of range");
            t[p] = static_cast<int>(v);
        }
        triples.push_back(t);
    }
    if (q < 0) r.fail("empty algebra file");
    return make_nilpotent_algebra(q, dim, triples);
}

NilpotentAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return read_algebra(in, path);
}

PolyFunctionSet poly_functions(const NilpotentAlgebra& alg) {
    const FiniteRing& r = alg.ring;
    const int na = alg.carrier();
    const int bound = std::max(1, alg.nu * alg.dim);
    constexpr std::size_t kBudget = 4096;

    std::set<std::vector<Elt>> seen;
    std::vector<std::vector<Elt>> work;
    const auto push = [&](const std::vector<Elt>& tab) {
        if (!seen.insert(tab).second) return;
        if (seen.size() > kBudget)
            throw ResourceError("polynomial function set exceeds the table budget");
        work.push_back(tab);
    };

    // Generators: the constants from N and the scaled power maps v -> n v^k
    // (both sides when the algebra is noncommutative).
    std::vector<Elt> powers(static_cast<std::size_t>(na));
    for (int v = 0; v < na; ++v) powers[v] = static_cast<Elt>(v);
    std::vector<Elt> tab(static_cast<std::size_t>(na));
    for (int k = 1; k <= bound; ++k) {
        if (k > 1)
            for (int v = 0; v < na; ++v) powers[v] = r.mul(powers[v], static_cast<Elt>(v));
        for (Elt n : alg.n_elems) {
            for (int v = 0; v < na; ++v) tab[v] = r.mul(n, powers[v]);
            push(tab);
            if (!alg.commutative) {
                for (int v = 0; v < na; ++v) tab[v] = r.mul(powers[v], n);
                push(tab);
            }
        }
    }
    for (Elt n : alg.n_elems) {
        std::fill(tab.begin(), tab.end(), n);
        push(tab);
    }

    // Closure under everything the two brace products use. Pair (i, j) is
    // handled when the later of the two enters the done range.
    for (std::size_t done = 0; done < work.size(); ++done) {
        const std::vector<Elt> f = work[done];  // copy: work may reallocate
        for (int v = 0; v < na; ++v) tab[v] = r.mul(static_cast<Elt>(v), f[v]);
        push(tab);
        for (int v = 0; v < na; ++v) tab[v] = r.mul(f[v], static_cast<Elt>(v));
        push(tab);
        for (std::size_t j = 0; j <= done; ++j) {
            const std::vector<Elt> g = work[j];
            for (int v = 0; v < na; ++v) tab[v] = r.sum(f[v], g[v]);
            push(tab);
            for (int v = 0; v < na; ++v) tab[v] = r.mul(f[v], g[v]);
            push(tab);
            for (int v = 0; v < na; ++v) tab[v] = r.mul(g[v], f[v]);
            push(tab);
            for (int v = 0; v < na; ++v) tab[v] = g[r.sum(static_cast<Elt>(v), f[v])];
            push(tab);
            for (int v = 0; v < na; ++v) tab[v] = f[r.sum(static_cast<Elt>(v), g[v])];
            push(tab);
            for (int v = 0; v < na; ++v) tab[v] = g[r.circle(static_cast<Elt>(v), f[v])];
            push(tab);
            for (int v = 0; v < na; ++v) tab[v] = f[r.circle(static_cast<Elt>(v), g[v])];
            push(tab);
        }
    }

    PolyFunctionSet out;
    out.alg = alg;
    out.fns.assign(seen.begin(), seen.end());
    out.degree_bound = bound;
    return out;
}

namespace {

Elt poly_index(const PolyFunctionSet& s, const std::vector<Elt>& tab) {
    const auto it = std::lower_bound(s.fns.begin(), s.fns.end(), tab);
    if (it == s.fns.end() || *it != tab)
        throw ValidationError("the function set is not closed under the brace operations");
    return static_cast<Elt>(it - s.fns.begin());
}

}  // namespace

SkewBrace poly_brace_additive(const PolyFunctionSet& s) {
    if (!s.alg.commutative)
        throw ValidationError("the additive polynomial brace needs a commutative algebra");
    const FiniteRing& r = s.alg.ring;
    const int n = s.size();
    const int na = s.alg.carrier();
    std::vector<Elt> add_t(static_cast<std::size_t>(n) * n);
    std::vector<Elt> mul_t(static_cast<std::size_t>(n) * n);
    std::vector<Elt> tab(static_cast<std::size_t>(na));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& f = s.fns[i];
            const auto& g = s.fns[j];
            for (int v = 0; v < na; ++v) tab[v] = r.sum(f[v], g[v]);
            add_t[static_cast<std::size_t>(i) * n + j] = poly_index(s, tab);
            for (int v = 0; v < na; ++v)
                tab[v] = r.sum(f[v], g[r.sum(static_cast<Elt>(v), f[v])]);
            mul_t[static_cast<std::size_t>(i) * n + j] = poly_index(s, tab);
        }
    SkewBrace b = make_skew_brace(n, std::move(add_t), std::move(mul_t));
    for (Elt x = 0; x < n; ++x)
        for (Elt y = static_cast<Elt>(x + 1); y < n; ++y)
            if (b.add.op(x, y) != b.add.op(y, x))
                throw ValidationError("pointwise addition came out nonabelian at " +
                                      pair_str(x, y));
    return b;
}

SkewBrace poly_brace_circle(const PolyFunctionSet& s) {
    const FiniteRing& r = s.alg.ring;
    const int n = s.size();
    const int na = s.alg.carrier();
    std::vector<Elt> add_t(static_cast<std::size_t>(n) * n);
    std::vector<Elt> mul_t(static_cast<std::size_t>(n) * n);
    std::vector<Elt> tab(static_cast<std::size_t>(na));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& f = s.fns[i];
            const auto& g = s.fns[j];
            for (int v = 0; v < na; ++v) tab[v] = r.circle(f[v], g[v]);
            add_t[static_cast<std::size_t>(i) * n + j] = poly_index(s, tab);
            for (int v = 0; v < na; ++v)
                tab[v] = r.circle(f[v], g[r.circle(static_cast<Elt>(v), f[v])]);
            mul_t[static_cast<std::size_t>(i) * n + j] = poly_index(s, tab);
        }
    return make_skew_brace(n, std::move(add_t), std::move(mul_t));
}

}  // namespace braceforge
