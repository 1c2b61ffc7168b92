#include "braceforge/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <utility>

#include "braceforge/named_groups.hpp"
#include "braceforge/structure_theory.hpp"

namespace braceforge {

namespace {

// Position of a map in the lexicographically sorted automorphism list. The
// list is closed under composition, so a miss can only mean a broken input.
int aut_index(const std::vector<GroupMorphism>& auts, const std::vector<Elt>& map) {
    const auto it =
        std::lower_bound(auts.begin(), auts.end(), map,
                         [](const GroupMorphism& a, const std::vector<Elt>& m) {
                             return a.map < m;
                         });
    if (it == auts.end() || it->map != map)
        throw ValidationError("composed map escaped the automorphism list");
    return static_cast<int>(it - auts.begin());
}

// One depth-first search over automorphism assignments. Each instance owns
// its whole state, so branches can run on separate threads.
struct FamilySearch {
    const FiniteGroup& g;
    const std::vector<GroupMorphism>& auts;
    std::vector<int> f;          // assigned automorphism index, -1 when open
    std::vector<Elt> assigned;   // assignment order, for backtracking
    std::vector<Elt> scratch;    // composition workspace
    std::vector<Elt> out;        // completed families, flattened

    FamilySearch(const FiniteGroup& g_, const std::vector<GroupMorphism>& auts_)
        : g(g_), auts(auts_), f(static_cast<std::size_t>(g_.n), -1),
          scratch(static_cast<std::size_t>(g_.n)) {
        f[0] = 0;
        assigned.push_back(0);
    }

    int compose_index(int x, int y) {
        const auto& fx = auts[static_cast<std::size_t>(x)].map;
        const auto& fy = auts[static_cast<std::size_t>(y)].map;
        for (int i = 0; i < g.n; ++i) scratch[static_cast<std::size_t>(i)] = fx[fy[i]];
        return aut_index(auts, scratch);
    }

    // Forces the product of the assigned pairs at x and y. Returns false on
    // a clash with an earlier assignment.
    bool force(Elt x, Elt y) {
        const Elt z = g.op(x, auts[static_cast<std::size_t>(f[x])].map[y]);
        const int fz = compose_index(f[x], f[y]);
        if (f[z] < 0) {
            f[z] = fz;
            assigned.push_back(z);
            return true;
        }
        return f[z] == fz;
    }

    // Closes the assignment under products, processing every pair whose
    // later member sits at or beyond the watermark.
    bool close(std::size_t from) {
        for (std::size_t head = from; head < assigned.size(); ++head) {
            const Elt x = assigned[head];
            for (std::size_t j = 0; j <= head; ++j) {
                const Elt y = assigned[j];
                if (!force(x, y) || !force(y, x)) return false;
            }
        }
        return true;
    }

    void revert(std::size_t mark) {
        for (std::size_t i = mark; i < assigned.size(); ++i) f[assigned[i]] = -1;
        assigned.resize(mark);
    }

    void dfs() {
        int open = -1;
        for (int i = 0; i < g.n; ++i)
            if (f[static_cast<std::size_t>(i)] < 0) {
                open = i;
                break;
            }
        if (open < 0) {
            for (int i = 0; i < g.n; ++i)
                out.push_back(static_cast<Elt>(f[static_cast<std::size_t>(i)]));
            return;
        }
        const std::size_t mark = assigned.size();
        for (int c = 0; c < static_cast<int>(auts.size()); ++c) {
            f[static_cast<std::size_t>(open)] = c;
            assigned.push_back(static_cast<Elt>(open));
            if (close(mark)) dfs();
            revert(mark);
        }
        f[static_cast<std::size_t>(open)] = -1;
    }

    // Explores only the branch that assigns candidate c to the first open
    // element, for the threaded top-level split.
    void branch(int c) {
        const std::size_t mark = assigned.size();
        f[1] = c;
        assigned.push_back(1);
        if (close(mark)) dfs();
        revert(mark);
        f[1] = -1;
    }
};

int catalogue_index(const std::vector<NamedGroup>& cat, const FiniteGroup& g) {
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (are_isomorphic(cat[i].group, g)) return static_cast<int>(i);
    throw ValidationError("group of order " + std::to_string(g.n) +
                          " matches no catalogue entry");
}

long totient(int n) {
    long count = 0;
    for (int k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) ++count;
    return count;
}

}  // namespace

RegularSubgroupSearch regular_subgroups(const FiniteGroup& a, int max_order, int jobs) {
    if (a.n > max_order) throw OrderBoundExceeded(a.n, max_order);
    RegularSubgroupSearch s;
    s.base = a;
    s.auts = automorphism_group(a);
    const int n = a.n;
    if (n == 1) {
        s.count = 1;
        s.families = {0};
        return s;
    }

    // Split the candidates for the first assignment across workers; every
    // family fixes some automorphism there, so the branches partition the
    // search space.
    const int candidates = static_cast<int>(s.auts.size());
    const int workers = std::max(1, std::min(jobs, candidates));
    std::vector<std::vector<Elt>> results(static_cast<std::size_t>(candidates));
    std::atomic<int> next{0};
    const auto run = [&] {
        FamilySearch fs(a, s.auts);
        for (;;) {
            const int c = next.fetch_add(1);
            if (c >= candidates) break;
            fs.out.clear();
            fs.branch(c);
            results[static_cast<std::size_t>(c)] = std::move(fs.out);
        }
    };
    if (workers == 1) {
        run();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (auto& t : pool) t.join();
    }

    std::size_t total = 0;
    for (const auto& r : results) total += r.size();
    std::vector<Elt> flat;
    flat.reserve(total);
    for (const auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
    s.count = static_cast<int>(total / static_cast<std::size_t>(n));

    // Sort the families so the result does not depend on the schedule.
    std::vector<int> order(static_cast<std::size_t>(s.count));
    std::iota(order.begin(), order.end(), 0);
    const auto row = [&](int k) { return flat.data() + static_cast<std::size_t>(k) * n; };
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::lexicographical_compare(row(x), row(x) + n, row(y), row(y) + n);
    });
    s.families.resize(flat.size());
    for (int k = 0; k < s.count; ++k)
        std::copy(row(order[static_cast<std::size_t>(k)]),
                  row(order[static_cast<std::size_t>(k)]) + n,
                  s.families.begin() + static_cast<std::size_t>(k) * n);
    return s;
}

int classify_orbits(RegularSubgroupSearch& s) {
    const int n = s.base.n;
    const int m = s.count;
    const int na = static_cast<int>(s.auts.size());

    // Greedy generating set of the automorphism group: pull in the first
    // element outside the span, then re-close. Keeps the orbit walk short.
    std::vector<char> known(static_cast<std::size_t>(na), 0);
    known[0] = 1;
    std::vector<int> span{0};
    std::vector<int> gens;
    std::vector<Elt> tmp(static_cast<std::size_t>(n));
    const auto compose_idx = [&](int x, int y) {
        const auto& fx = s.auts[static_cast<std::size_t>(x)].map;
        const auto& fy = s.auts[static_cast<std::size_t>(y)].map;
        for (int i = 0; i < n; ++i) tmp[static_cast<std::size_t>(i)] = fx[fy[i]];
        return aut_index(s.auts, tmp);
    };
    for (int i = 0; i < na; ++i) {
        if (known[static_cast<std::size_t>(i)]) continue;
        gens.push_back(i);
        known[static_cast<std::size_t>(i)] = 1;
        span.push_back(i);
        for (std::size_t head = 0; head < span.size(); ++head)
            for (int g : gens) {
                const int y = compose_idx(g, span[head]);
                if (!known[static_cast<std::size_t>(y)]) {
                    known[static_cast<std::size_t>(y)] = 1;
                    span.push_back(y);
                }
            }
    }

    // Conjugating maps for each generator, precomposed with the inverse
    // permutation of the base so one pass builds the new family.
    struct Action {
        const GroupMorphism* fwd;
        GroupMorphism inv;
    };
    std::vector<Action> actions;
    actions.reserve(gens.size());
    for (int g : gens)
        actions.push_back({&s.auts[static_cast<std::size_t>(g)],
                           inverse(s.auts[static_cast<std::size_t>(g)])});

    const auto family_at = [&](int k) {
        return s.families.data() + static_cast<std::size_t>(k) * n;
    };
    const auto find_family = [&](const std::vector<Elt>& fam) {
        int lo = 0, hi = m;
        while (lo < hi) {
            const int mid = (lo + hi) / 2;
            const Elt* r = family_at(mid);
            if (std::lexicographical_compare(r, r + n, fam.data(), fam.data() + n))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo == m || !std::equal(fam.begin(), fam.end(), family_at(lo)))
            throw ValidationError("conjugated family left the search results");
        return lo;
    };

    s.orbit_of.assign(static_cast<std::size_t>(m), -1);
    s.orbit_count = 0;
    std::vector<int> queue;
    std::vector<Elt> conj(static_cast<std::size_t>(n));
    for (int k = 0; k < m; ++k) {
        if (s.orbit_of[static_cast<std::size_t>(k)] >= 0) continue;
        const int id = s.orbit_count++;
        s.orbit_of[static_cast<std::size_t>(k)] = id;
        queue.assign(1, k);
        while (!queue.empty()) {
            const int cur = queue.back();
            queue.pop_back();
            const Elt* fam = family_at(cur);
            for (const Action& act : actions) {
                // b -> g f_{g^-1(b)} g^-1 gives the conjugated family
                for (int b = 0; b < n; ++b) {
                    const Elt src = act.inv.map[static_cast<std::size_t>(b)];
                    const auto& fa = s.auts[fam[src]].map;
                    for (int i = 0; i < n; ++i)
                        tmp[static_cast<std::size_t>(i)] =
                            act.fwd->map[fa[act.inv.map[static_cast<std::size_t>(i)]]];
                    conj[static_cast<std::size_t>(b)] =
                        static_cast<Elt>(aut_index(s.auts, tmp));
                }
                const int hit = find_family(conj);
                if (s.orbit_of[static_cast<std::size_t>(hit)] < 0) {
                    s.orbit_of[static_cast<std::size_t>(hit)] = id;
                    queue.push_back(hit);
                }
            }
        }
    }
    return s.orbit_count;
}

SkewBrace brace_of(const RegularSubgroupSearch& s, int k) {
    const int n = s.base.n;
    const Elt* fam = s.families.data() + static_cast<std::size_t>(k) * n;
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a) {
        const auto& fa = s.auts[fam[a]].map;
        for (Elt b = 0; b < n; ++b)
            mul[static_cast<std::size_t>(a) * n + b] = s.base.op(a, fa[b]);
    }
    return make_skew_brace(n, s.base.table, std::move(mul), s.base.labels);
}

RegularSubgroupRecord record_of(const RegularSubgroupSearch& s, int k) {
    RegularSubgroupRecord r;
    const Elt* fam = s.families.data() + static_cast<std::size_t>(k) * s.base.n;
    r.f.assign(fam, fam + s.base.n);
    r.brace = brace_of(s, k);
    if (s.base.n <= kCatalogueMaxOrder)
        r.iso_type = catalogue_index(catalogue_order(s.base.n), r.brace.mul);
    if (!s.orbit_of.empty()) r.orbit_id = s.orbit_of[static_cast<std::size_t>(k)];
    return r;
}

CensusTable census(int n, int max_order, int jobs) {
    if (n < 1 || n > kCatalogueMaxOrder) throw CatalogueMissing(n);
    const auto& cat = catalogue_order(n);
    const int m = static_cast<int>(cat.size());

    CensusTable t;
    t.n = n;
    for (const auto& entry : cat) {
        t.names.push_back(entry.name);
        t.aut_orders.push_back(
            static_cast<long>(automorphism_group(entry.group).size()));
    }
    t.e_matrix.assign(static_cast<std::size_t>(m), std::vector<long>(m, 0));
    t.f_matrix = t.e_matrix;
    t.classes = t.e_matrix;

    for (int j = 0; j < m; ++j) {
        RegularSubgroupSearch s =
            regular_subgroups(cat[static_cast<std::size_t>(j)].group, max_order, jobs);
        classify_orbits(s);

        std::vector<long> orbit_size(static_cast<std::size_t>(s.orbit_count), 0);
        std::vector<int> rep(static_cast<std::size_t>(s.orbit_count), -1);
        for (int k = 0; k < s.count; ++k) {
            const int o = s.orbit_of[static_cast<std::size_t>(k)];
            ++orbit_size[static_cast<std::size_t>(o)];
            if (rep[static_cast<std::size_t>(o)] < 0) rep[static_cast<std::size_t>(o)] = k;
        }
        // The circle groups of one orbit are all isomorphic, so the type is
        // read off the representative alone.
        for (int o = 0; o < s.orbit_count; ++o) {
            const SkewBrace b = brace_of(s, rep[static_cast<std::size_t>(o)]);
            const int i = catalogue_index(cat, b.mul);
            t.f_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                orbit_size[static_cast<std::size_t>(o)];
            t.classes[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
        }
    }

    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const long scaled =
                t.aut_orders[static_cast<std::size_t>(i)] *
                t.f_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (scaled % t.aut_orders[static_cast<std::size_t>(j)] != 0)
                throw ValidationError(
                    "Hopf-Galois scaling does not divide exactly at (" +
                    t.names[static_cast<std::size_t>(i)] + ", " +
                    t.names[static_cast<std::size_t>(j)] + ")");
            t.e_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                scaled / t.aut_orders[static_cast<std::size_t>(j)];
            t.h += t.e_matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    return t;
}

UniquenessReport uniqueness_check(int n, int max_order, int jobs) {
    UniquenessReport r;
    r.n = n;
    const CensusTable t = census(n, max_order, jobs);
    for (const auto& row : t.classes)
        for (long c : row) r.brace_classes += c;
    r.unique = r.brace_classes == 1;
    r.coprime = std::gcd(static_cast<long>(n), totient(n)) == 1;
    return r;
}

CyclicPrimePowerReport cyclic_prime_power_report(int p, int k, int max_order) {
    if (p < 3 || p % 2 == 0) throw ValidationError("the report needs an odd prime");
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw ValidationError("the report needs an odd prime");
    if (k < 1) throw ValidationError("the exponent must be positive");
    long order = 1;
    for (int i = 0; i < k; ++i) {
        order *= p;
        if (order > max_order) throw OrderBoundExceeded(static_cast<int>(order), max_order);
    }

    RegularSubgroupSearch s =
        regular_subgroups(cyclic(static_cast<int>(order)), max_order);
    classify_orbits(s);

    CyclicPrimePowerReport r;
    r.p = p;
    r.k = k;
    r.subgroup_count = s.count;
    r.class_count = s.orbit_count;

    std::vector<long> orbit_size(static_cast<std::size_t>(s.orbit_count), 0);
    std::vector<int> rep(static_cast<std::size_t>(s.orbit_count), -1);
    for (int i = 0; i < s.count; ++i) {
        const int o = s.orbit_of[static_cast<std::size_t>(i)];
        ++orbit_size[static_cast<std::size_t>(o)];
        if (rep[static_cast<std::size_t>(o)] < 0) rep[static_cast<std::size_t>(o)] = i;
    }
    std::vector<std::pair<long, long>> rows;  // socle size, orbit size
    for (int o = 0; o < s.orbit_count; ++o)
        rows.emplace_back(
            socle(brace_of(s, rep[static_cast<std::size_t>(o)])).size(),
            orbit_size[static_cast<std::size_t>(o)]);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [soc, orb] : rows) {
        r.socle_sizes.push_back(soc);
        r.orbit_sizes.push_back(orb);
    }
    return r;
}

}  // namespace braceforge
