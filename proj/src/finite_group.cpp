#include "braceforge/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace braceforge {

namespace {

std::vector<Elt> iota_map(int n) {
    std::vector<Elt> m(n);
    std::iota(m.begin(), m.end(), Elt{0});
    return m;
}

}  // namespace

int FiniteGroup::element_order(Elt a) const {
    int ord = 1;
    Elt x = a;
    while (x != 0) {
        x = op(x, a);
        ++ord;
    }
    return ord;
}

Elt FiniteGroup::power(Elt a, long long k) const {
    long long r = k % element_order(a);
    if (r < 0) r += element_order(a);
    Elt x = 0;
    while (r-- > 0) x = op(x, a);
    return x;
}

std::string FiniteGroup::label(Elt a) const {
    if (!labels.empty() && !labels[a].empty()) return labels[a];
    return std::to_string(a);
}

bool Subgroup::contains(Elt a) const {
    return std::binary_search(elems.begin(), elems.end(), a);
}

FiniteGroup group_from_table(int n, std::vector<Elt> table,
                             std::vector<std::string> labels) {
    if (n <= 0 || n > 0xFFFF)
        throw MalformedTable("group order out of range: " + std::to_string(n));
    const std::size_t nn = static_cast<std::size_t>(n);
    if (table.size() != nn * nn)
        throw MalformedTable("table has " + std::to_string(table.size()) +
                             " entries, expected " + std::to_string(nn * nn));
    for (Elt v : table)
        if (v >= n) throw MalformedTable("table entry " + std::to_string(v) + " out of range");
    if (!labels.empty() && labels.size() != nn)
        throw MalformedTable("label list must be empty or match the order");

    auto at = [&](int a, int b) { return table[static_cast<std::size_t>(a) * n + b]; };

    // Two sided identity.
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = at(a, b) == b && at(b, a) == b;
        if (ok) e = a;
    }
    if (e < 0) throw NoIdentity();

    // Two sided inverses.
    std::vector<Elt> inv(n, kNoElt);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (at(a, b) == e && at(b, a) == e) {
                inv[a] = static_cast<Elt>(b);
                break;
            }
        }
        if (inv[a] == kNoElt) throw NoInverse(static_cast<Elt>(a));
    }

    // Associativity via Light's test: it is enough to check triples whose
    // middle element runs over a generating set.  The generating set comes
    // from a greedy closure, which only uses the raw table and therefore
    // works before associativity is known.
    std::vector<char> in_cl(n, 0);
    std::vector<Elt> cl{static_cast<Elt>(e)};
    in_cl[e] = 1;
    std::vector<Elt> gens;
    auto extend = [&](Elt x) {
        std::size_t frontier = cl.size();
        cl.push_back(x);
        in_cl[x] = 1;
        while (frontier < cl.size()) {
            Elt y = cl[frontier++];
            for (std::size_t i = 0; i < cl.size(); ++i) {
                for (Elt p : {at(y, cl[i]), at(cl[i], y)}) {
                    if (!in_cl[p]) {
                        in_cl[p] = 1;
                        cl.push_back(p);
                    }
                }
            }
        }
    };
    for (int x = 0; x < n; ++x) {
        if (!in_cl[x]) {
            gens.push_back(static_cast<Elt>(x));
            extend(static_cast<Elt>(x));
        }
    }
    for (Elt s : gens) {
        for (int a = 0; a < n; ++a) {
            const Elt as = at(a, s);
            for (int b = 0; b < n; ++b) {
                if (at(as, b) != at(a, at(s, b)))
                    throw NotAssociative(static_cast<Elt>(a), s, static_cast<Elt>(b));
            }
        }
    }

    // Move the identity to index 0 by swapping labels 0 <-> e.
    FiniteGroup g;
    g.n = n;
    if (e == 0) {
        g.table = std::move(table);
        g.inv = std::move(inv);
        g.labels = std::move(labels);
    } else {
        std::vector<Elt> pi = iota_map(n);
        pi[0] = static_cast<Elt>(e);
        pi[e] = 0;  // pi is its own inverse
        g.table.resize(nn * nn);
        g.inv.resize(nn);
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b)
                g.table[static_cast<std::size_t>(pi[a]) * n + pi[b]] = pi[at(a, b)];
            g.inv[pi[a]] = pi[inv[a]];
        }
        if (!labels.empty()) {
            g.labels.resize(nn);
            for (int a = 0; a < n; ++a) g.labels[pi[a]] = labels[a];
        }
    }
    return g;
}

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const GroupMorphism& m) {
    if (static_cast<int>(m.map.size()) != dom.n) return false;
    for (Elt v : m.map)
        if (v >= cod.n) return false;
    for (Elt a = 0; a < dom.n; ++a)
        for (Elt b = 0; b < dom.n; ++b)
            if (m.map[dom.op(a, b)] != cod.op(m.map[a], m.map[b])) return false;
    return true;
}

GroupMorphism compose(const GroupMorphism& f, const GroupMorphism& g) {
    GroupMorphism r;
    r.map.resize(g.map.size());
    for (std::size_t i = 0; i < g.map.size(); ++i) r.map[i] = f.map[g.map[i]];
    return r;
}

GroupMorphism inverse(const GroupMorphism& f) {
    GroupMorphism r;
    r.map.resize(f.map.size());
    for (std::size_t i = 0; i < f.map.size(); ++i) r.map[f.map[i]] = static_cast<Elt>(i);
    return r;
}

namespace {

// Backtracking search for isomorphisms G -> H.  Images are forced along a
// fixed greedy generating sequence of G; each assignment is closed under
// products so conflicts surface as early as possible.
class IsoSearch {
public:
    IsoSearch(const FiniteGroup& g, const FiniteGroup& h,
              const std::function<bool(const GroupMorphism&)>& visit)
        : g_(g), h_(h), visit_(visit) {
        base_ = generating_sequence(g_);
        ord_h_.resize(h_.n);
        for (Elt x = 0; x < h_.n; ++x) ord_h_[x] = h_.element_order(x);
        map_.assign(g_.n, kNoElt);
        used_.assign(h_.n, 0);
        known_.reserve(g_.n);
    }

    void run() {
        if (g_.n != h_.n) return;
        std::vector<Elt> log;
        if (!close(0, 0, log)) return;  // identity must map to identity
        descend(0);
    }

private:
    bool stop_ = false;

    // Assign map_[g] = h and close the partial map under products.  Every
    // assignment is appended to log so the caller can undo.  Returns false on
    // any conflict.
    bool close(Elt g, Elt h, std::vector<Elt>& log) {
        std::size_t qi = known_.size();
        if (!set(g, h, log)) return false;
        while (qi < known_.size()) {
            Elt x = known_[qi++];
            for (std::size_t i = 0; i < known_.size(); ++i) {
                Elt u = known_[i];
                if (!derive(g_.op(x, u), h_.op(map_[x], map_[u]), log)) return false;
                if (!derive(g_.op(u, x), h_.op(map_[u], map_[x]), log)) return false;
            }
        }
        return true;
    }

    bool set(Elt g, Elt h, std::vector<Elt>& log) {
        if (used_[h]) return false;
        map_[g] = h;
        used_[h] = 1;
        known_.push_back(g);
        log.push_back(g);
        return true;
    }

    bool derive(Elt gp, Elt hp, std::vector<Elt>& log) {
        if (map_[gp] != kNoElt) return map_[gp] == hp;
        return set(gp, hp, log);
    }

    void undo(const std::vector<Elt>& log) {
        for (auto it = log.rbegin(); it != log.rend(); ++it) {
            used_[map_[*it]] = 0;
            map_[*it] = kNoElt;
            known_.pop_back();
        }
    }

    void descend(std::size_t depth) {
        if (stop_) return;
        if (static_cast<int>(known_.size()) == g_.n) {
            GroupMorphism m;
            m.map = map_;
            if (!visit_(m)) stop_ = true;
            return;
        }
        const Elt g = base_[depth];
        const int need = g_.element_order(g);
        for (Elt h = 0; h < h_.n; ++h) {
            if (used_[h] || ord_h_[h] != need) continue;
            std::vector<Elt> log;
            if (close(g, h, log)) {
                descend(depth + 1);
                if (stop_) return;
            }
            undo(log);
        }
    }

    const FiniteGroup& g_;
    const FiniteGroup& h_;
    const std::function<bool(const GroupMorphism&)>& visit_;
    std::vector<Elt> base_;
    std::vector<int> ord_h_;
    std::vector<Elt> map_;
    std::vector<char> used_;
    std::vector<Elt> known_;
};

}  // namespace

void enumerate_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                            const std::function<bool(const GroupMorphism&)>& visit) {
    IsoSearch(g, h, visit).run();
}

std::vector<GroupMorphism> automorphism_group(const FiniteGroup& g) {
    std::vector<GroupMorphism> out;
    enumerate_isomorphisms(g, g, [&](const GroupMorphism& m) {
        out.push_back(m);
        return true;
    });
    std::sort(out.begin(), out.end(),
              [](const GroupMorphism& a, const GroupMorphism& b) { return a.map < b.map; });
    return out;
}

std::vector<int> element_order_profile(const FiniteGroup& g) {
    std::vector<int> p(g.n);
    for (Elt a = 0; a < g.n; ++a) p[a] = g.element_order(a);
    std::sort(p.begin(), p.end());
    return p;
}

std::optional<GroupMorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
    if (g.n != h.n) return std::nullopt;
    const GroupFacts fg = structure_queries(g);
    const GroupFacts fh = structure_queries(h);
    if (fg.abelian != fh.abelian || fg.exponent != fh.exponent ||
        fg.center.size() != fh.center.size())
        return std::nullopt;
    if (element_order_profile(g) != element_order_profile(h)) return std::nullopt;
    std::optional<GroupMorphism> found;
    enumerate_isomorphisms(g, h, [&](const GroupMorphism& m) {
        found = m;
        return false;
    });
    return found;
}

HolomorphData holomorph(const FiniteGroup& g, int max_order) {
    HolomorphData data;
    data.base_order = g.n;
    data.auts = automorphism_group(g);
    const long long big = static_cast<long long>(g.n) * static_cast<long long>(data.auts.size());
    if (big > max_order)
        throw ResourceError("holomorph order " + std::to_string(big) +
                            " exceeds the materialisation bound " + std::to_string(max_order));
    const int N = static_cast<int>(big);
    const int n = g.n;
    const int k = static_cast<int>(data.auts.size());

    // Composition table on automorphism indices.
    std::map<std::vector<Elt>, int> index_of;
    for (int i = 0; i < k; ++i) index_of[data.auts[i].map] = i;
    std::vector<int> comp(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            comp[static_cast<std::size_t>(i) * k + j] =
                index_of.at(compose(data.auts[i], data.auts[j]).map);

    std::vector<Elt> table(static_cast<std::size_t>(N) * N);
    for (int i = 0; i < k; ++i) {
        const auto& f = data.auts[i].map;
        for (int a = 0; a < n; ++a) {
            const std::size_t row = static_cast<std::size_t>(i * n + a) * N;
            for (int j = 0; j < k; ++j) {
                const int cij = comp[static_cast<std::size_t>(i) * k + j];
                for (int b = 0; b < n; ++b)
                    table[row + j * n + b] =
                        static_cast<Elt>(cij * n + g.op(static_cast<Elt>(a), f[b]));
            }
        }
    }
    data.hol = group_from_table(N, std::move(table));
    data.embed_translations.resize(n);
    for (int a = 0; a < n; ++a) data.embed_translations[a] = static_cast<Elt>(a);
    return data;
}

Subgroup closure(const FiniteGroup& g, const std::vector<Elt>& gens) {
    std::vector<char> in(g.n, 0);
    std::vector<Elt> list{0};
    in[0] = 1;
    for (Elt x : gens) {
        if (!in[x]) {
            in[x] = 1;
            list.push_back(x);
        }
    }
    std::size_t frontier = 1;
    while (frontier < list.size()) {
        Elt y = list[frontier++];
        for (std::size_t i = 0; i < list.size(); ++i) {
            for (Elt p : {g.op(y, list[i]), g.op(list[i], y)}) {
                if (!in[p]) {
                    in[p] = 1;
                    list.push_back(p);
                }
            }
        }
    }
    Subgroup s;
    s.elems = std::move(list);
    std::sort(s.elems.begin(), s.elems.end());
    return s;
}

bool is_subgroup(const FiniteGroup& g, const Subgroup& s) {
    if (s.elems.empty() || s.elems[0] != 0) return false;
    for (Elt a : s.elems) {
        if (a >= g.n) return false;
        if (!s.contains(g.inv[a])) return false;
        for (Elt b : s.elems)
            if (!s.contains(g.op(a, b))) return false;
    }
    return true;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
    for (Elt x = 0; x < g.n; ++x)
        for (Elt h : s.elems)
            if (!s.contains(g.conjugate(x, h))) return false;
    return true;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
    if (!is_subgroup(g, n)) throw ValidationError("coset space needs a subgroup");
    for (Elt x = 0; x < g.n; ++x)
        for (Elt h : n.elems)
            if (!n.contains(g.conjugate(x, h))) throw NotNormal(x, h);

    // Name each coset by its smallest member, then index cosets by sorted
    // representative.  The identity coset contains 0, so it gets index 0.
    std::vector<Elt> rep_of(g.n, kNoElt);
    std::vector<Elt> reps;
    for (Elt x = 0; x < g.n; ++x) {
        if (rep_of[x] != kNoElt) continue;
        Elt r = x;  // x is minimal in its coset: smaller members were visited first
        for (Elt h : n.elems) rep_of[g.op(x, h)] = r;
        reps.push_back(r);
    }
    const int q = static_cast<int>(reps.size());
    std::vector<Elt> index(g.n, kNoElt);
    for (int i = 0; i < q; ++i) index[reps[i]] = static_cast<Elt>(i);

    std::vector<Elt> table(static_cast<std::size_t>(q) * q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            table[static_cast<std::size_t>(i) * q + j] = index[rep_of[g.op(reps[i], reps[j])]];

    Quotient out;
    out.group = group_from_table(q, std::move(table));
    out.proj.resize(g.n);
    for (Elt x = 0; x < g.n; ++x) out.proj[x] = index[rep_of[x]];
    return out;
}

FiniteGroup subgroup_group(const FiniteGroup& g, const Subgroup& s) {
    if (!is_subgroup(g, s)) throw ValidationError("subset is not a subgroup");
    const int k = s.size();
    std::vector<Elt> pos(g.n, kNoElt);
    for (int i = 0; i < k; ++i) pos[s.elems[static_cast<std::size_t>(i)]] = static_cast<Elt>(i);
    std::vector<Elt> table(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            table[static_cast<std::size_t>(i) * k + j] =
                pos[g.op(s.elems[static_cast<std::size_t>(i)], s.elems[static_cast<std::size_t>(j)])];
    std::vector<std::string> labels;
    if (!g.labels.empty())
        for (Elt e : s.elems) labels.push_back(g.label(e));
    return group_from_table(k, std::move(table), std::move(labels));
}

namespace {

Subgroup commutator_closure(const FiniteGroup& g, const Subgroup& a, const Subgroup& b) {
    std::vector<Elt> gens;
    for (Elt x : a.elems)
        for (Elt y : b.elems) gens.push_back(g.commutator(x, y));
    return closure(g, gens);
}

Subgroup full_subgroup(const FiniteGroup& g) {
    Subgroup s;
    s.elems.resize(g.n);
    std::iota(s.elems.begin(), s.elems.end(), Elt{0});
    return s;
}

}  // namespace

GroupFacts structure_queries(const FiniteGroup& g) {
    GroupFacts f;
    f.abelian = true;
    for (Elt a = 0; a < g.n && f.abelian; ++a)
        for (Elt b = a + 1; b < g.n && f.abelian; ++b)
            if (g.op(a, b) != g.op(b, a)) f.abelian = false;
    for (Elt a = 0; a < g.n; ++a) {
        bool central = true;
        for (Elt b = 0; b < g.n && central; ++b)
            if (g.op(a, b) != g.op(b, a)) central = false;
        if (central) f.center.push_back(a);
    }
    f.exponent = 1;
    for (Elt a = 0; a < g.n; ++a) f.exponent = std::lcm(f.exponent, g.element_order(a));

    // Derived series for solvability.
    Subgroup d = full_subgroup(g);
    while (true) {
        Subgroup next = commutator_closure(g, d, d);
        if (next.elems.size() == d.elems.size()) break;
        d = std::move(next);
    }
    f.solvable = d.elems.size() == 1;

    // Lower central series for nilpotency.
    Subgroup whole = full_subgroup(g);
    Subgroup l = whole;
    while (true) {
        Subgroup next = commutator_closure(g, l, whole);
        if (next.elems.size() == l.elems.size()) break;
        l = std::move(next);
    }
    f.nilpotent = l.elems.size() == 1;
    return f;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
    std::set<std::vector<Elt>> seen;
    std::vector<std::vector<Elt>> work;
    seen.insert({0});
    work.push_back({0});
    while (!work.empty()) {
        std::vector<Elt> h = std::move(work.back());
        work.pop_back();
        Subgroup hs;
        hs.elems = h;
        for (Elt x = 0; x < g.n; ++x) {
            if (hs.contains(x)) continue;
            std::vector<Elt> gens = h;
            gens.push_back(x);
            Subgroup k = closure(g, gens);
            if (seen.insert(k.elems).second) work.push_back(k.elems);
        }
    }
    std::vector<Subgroup> out;
    for (const auto& e : seen) {
        Subgroup s;
        s.elems = e;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
        return a.elems < b.elems;
    });
    return out;
}

std::vector<Elt> generating_sequence(const FiniteGroup& g) {
    std::vector<Elt> gens;
    Subgroup cl;
    cl.elems = {0};
    for (Elt x = 0; x < g.n; ++x) {
        if (!cl.contains(x)) {
            gens.push_back(x);
            std::vector<Elt> gs = gens;
            cl = closure(g, gs);
        }
    }
    return gens;
}

}  // namespace braceforge
