#include "braceforge/structure_theory.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "braceforge/named_groups.hpp"
#include "braceforge/ybe.hpp"

namespace braceforge {

namespace {

bool sorted_contains(const std::vector<Elt>& v, Elt a) {
    return std::binary_search(v.begin(), v.end(), a);
}

std::vector<int> prime_factors(int n) {
    std::vector<int> out;
    for (int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            if (out.empty() || out.back() != p) out.push_back(p);
            n /= p;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

IdealCheck check_ideal(const SkewBrace& b, const Subgroup& candidate) {
    const int n = b.size();
    const auto& I = candidate.elems;
    if (!is_subgroup(b.mul, candidate))
        return {false, "not a subgroup of the circle group"};
    for (Elt g = 0; g < n; ++g)
        for (const Elt h : I)
            if (!sorted_contains(I, b.mul.conjugate(g, h)))
                return {false, "not normal in the circle group: conjugating " +
                                   std::to_string(h) + " by " + std::to_string(g) +
                                   " escapes"};
    for (Elt a = 0; a < n; ++a) {
        std::vector<Elt> left, right;
        left.reserve(I.size());
        right.reserve(I.size());
        for (const Elt h : I) {
            left.push_back(b.add.op(a, h));
            right.push_back(b.add.op(h, a));
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        if (left != right)
            return {false, "additive cosets differ at element " + std::to_string(a)};
    }
    for (Elt a = 0; a < n; ++a)
        for (const Elt h : I)
            if (!sorted_contains(I, b.lambda(a, h)))
                return {false, "lambda_" + std::to_string(a) + " moves " +
                                   std::to_string(h) + " out of the subset"};
    return {true, {}};
}

bool is_ideal(const SkewBrace& b, const Subgroup& candidate) {
    return check_ideal(b, candidate).ok;
}

std::vector<Subgroup> all_ideals(const SkewBrace& b) {
    std::vector<Subgroup> out;
    for (const Subgroup& s : all_subgroups(b.mul))
        if (is_ideal(b, s)) out.push_back(s);
    return out;
}

Subgroup socle(const SkewBrace& b) {
    const int n = b.size();
    std::vector<Elt> by_definition;
    for (Elt a = 0; a < n; ++a) {
        bool in = true;
        for (Elt x = 0; in && x < n; ++x) {
            if (b.mul.op(a, x) != b.add.op(a, x)) in = false;
            const Elt xa = b.mul.op(x, a);
            if (b.add.op(x, xa) != b.add.op(xa, x)) in = false;
        }
        if (in) by_definition.push_back(a);
    }

    const std::vector<Elt>& centre = structure_queries(b.add).center;
    std::vector<Elt> as_kernel;
    for (const Elt a : centre) {
        bool fixes_all = true;
        for (Elt x = 0; fixes_all && x < n; ++x)
            if (b.lambda(a, x) != x) fixes_all = false;
        if (fixes_all) as_kernel.push_back(a);
    }

    if (by_definition != as_kernel)
        throw ValidationError("socle computations disagree: definition gives " +
                              std::to_string(by_definition.size()) +
                              " elements, kernel form gives " +
                              std::to_string(as_kernel.size()));
    const Subgroup soc{std::move(by_definition)};
    if (const IdealCheck chk = check_ideal(b, soc); !chk.ok)
        throw ValidationError("socle fails its own ideal check: " + chk.failed);
    return soc;
}

BraceQuotient quotient_brace(const SkewBrace& b, const Subgroup& ideal) {
    if (const IdealCheck chk = check_ideal(b, ideal); !chk.ok)
        throw ValidationError("quotient needs an ideal: " + chk.failed);
    const int n = b.size();

    // index cosets by their smallest member; the coset of 0 sorts first
    std::vector<Elt> coset_min(static_cast<std::size_t>(n), kNoElt);
    for (Elt a = 0; a < n; ++a) {
        Elt least = a;
        for (const Elt h : ideal.elems) least = std::min(least, b.add.op(a, h));
        coset_min[a] = least;
    }
    std::vector<Elt> reps;
    for (Elt a = 0; a < n; ++a)
        if (coset_min[a] == a) reps.push_back(a);
    const int m = static_cast<int>(reps.size());

    std::vector<Elt> proj(static_cast<std::size_t>(n));
    for (Elt a = 0; a < n; ++a)
        proj[a] = static_cast<Elt>(
            std::lower_bound(reps.begin(), reps.end(), coset_min[a]) - reps.begin());

    std::vector<Elt> qadd(static_cast<std::size_t>(m) * m), qmul(qadd.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            qadd[static_cast<std::size_t>(i) * m + j] = proj[b.add.op(reps[i], reps[j])];
            qmul[static_cast<std::size_t>(i) * m + j] = proj[b.mul.op(reps[i], reps[j])];
        }
    return {make_skew_brace(m, std::move(qadd), std::move(qmul)), std::move(proj)};
}

SkewBrace sub_brace(const SkewBrace& b, const Subgroup& s) {
    if (!is_subgroup(b.add, s))
        throw ValidationError("subset is not an additive subgroup");
    const auto& el = s.elems;
    const int k = s.size();
    std::vector<int> pos(static_cast<std::size_t>(b.size()), -1);
    for (int i = 0; i < k; ++i) pos[el[static_cast<std::size_t>(i)]] = i;

    std::vector<Elt> sadd(static_cast<std::size_t>(k) * k), smul(sadd.size());
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            const Elt p = b.add.op(el[static_cast<std::size_t>(i)], el[static_cast<std::size_t>(j)]);
            const Elt c = b.mul.op(el[static_cast<std::size_t>(i)], el[static_cast<std::size_t>(j)]);
            if (pos[c] < 0)
                throw ValidationError(
                    "subset is not closed under the circle operation at (" +
                    std::to_string(el[static_cast<std::size_t>(i)]) + ", " +
                    std::to_string(el[static_cast<std::size_t>(j)]) + ")");
            sadd[static_cast<std::size_t>(i) * k + j] = static_cast<Elt>(pos[p]);
            smul[static_cast<std::size_t>(i) * k + j] = static_cast<Elt>(pos[c]);
        }
    std::vector<std::string> labels;
    if (!b.add.labels.empty()) {
        labels.reserve(el.size());
        for (const Elt a : el) labels.push_back(b.add.labels[a]);
    }
    return make_skew_brace(k, std::move(sadd), std::move(smul), std::move(labels));
}

SocleSeries socle_series(const SkewBrace& b) {
    SocleSeries out;
    out.quotients.push_back(b);
    while (true) {
        const SkewBrace& cur = out.quotients.back();
        if (cur.size() == 1) {
            out.level = static_cast<int>(out.quotients.size());
            break;
        }
        const Subgroup soc = socle(cur);
        if (soc.size() == 1) break;  // stalled: no finite level
        out.quotients.push_back(quotient_brace(cur, soc).brace);
    }

    // the S-chain recursion, on the original carrier
    const int n = b.size();
    std::vector<Elt> prev = socle(b).elems;
    while (true) {
        out.s_chain.push_back(Subgroup{prev});
        if (static_cast<int>(prev.size()) == n) break;
        std::vector<Elt> next;
        for (Elt a = 0; a < n; ++a) {
            bool in = true;
            for (Elt x = 0; in && x < n; ++x) {
                const Elt diff =
                    b.add.op(b.add.op(b.add.inv[b.mul.op(a, x)], a), x);
                if (!sorted_contains(prev, diff)) in = false;
                if (!sorted_contains(prev, b.add.commutator(x, b.mul.op(x, a)))) in = false;
            }
            if (in) next.push_back(a);
        }
        if (next == prev) break;  // stalled
        prev = std::move(next);
    }
    return out;
}

std::optional<int> multipermutation_level(const SkewBrace& b) {
    return socle_series(b).level;
}

bool is_simple(const SkewBrace& b) {
    return b.size() > 1 && all_ideals(b).size() == 2;
}

SkewBrace hall_sub_brace(const SkewBrace& b, const std::vector<int>& primes) {
    if (!structure_queries(b.add).nilpotent) throw AddNotNilpotent();
    std::vector<Elt> elems;
    for (Elt a = 0; a < b.size(); ++a) {
        bool keep = true;
        for (const int p : prime_factors(b.add.element_order(a)))
            if (std::find(primes.begin(), primes.end(), p) == primes.end()) keep = false;
        if (keep) elems.push_back(a);
    }
    return sub_brace(b, Subgroup{std::move(elems)});
}

std::vector<SkewBrace> sylow_sub_braces(const SkewBrace& b) {
    if (!structure_queries(b.add).nilpotent) throw AddNotNilpotent();
    std::vector<SkewBrace> out;
    for (const int p : prime_factors(b.size())) out.push_back(hall_sub_brace(b, {p}));
    return out;
}

StructuralChecks structural_theorem_checks(const SkewBrace& b) {
    StructuralChecks out;
    const GroupFacts add = structure_queries(b.add);
    const GroupFacts mul = structure_queries(b.mul);
    out.add_nilpotent = add.nilpotent;
    out.add_solvable = add.solvable;
    out.mul_solvable = mul.solvable;
    out.mul_abelian = mul.abelian;
    out.finite_level = multipermutation_level(b).has_value();
    out.socle_index = b.size() / socle(b).size();

    const long long k = out.socle_index;
    out.power_map_additive = true;
    for (Elt a = 0; out.power_map_additive && a < b.size(); ++a)
        for (Elt x = 0; out.power_map_additive && x < b.size(); ++x)
            if (b.add.power(b.add.op(a, x), k) !=
                b.add.op(b.add.power(a, k), b.add.power(x, k)))
                out.power_map_additive = false;
    return out;
}

std::string structural_summary(const SkewBrace& b) {
    const auto name_of = [](const FiniteGroup& g) {
        return catalogue_name(g).value_or("n" + std::to_string(g.n));
    };
    const std::optional<int> level = multipermutation_level(b);
    std::ostringstream out;
    out << "order=" << b.size() << " add=" << name_of(b.add) << " mul=" << name_of(b.mul)
        << " soc=" << socle(b).size() << " mpl=";
    if (level)
        out << *level;
    else
        out << "none";
    out << " simple=" << (is_simple(b) ? "yes" : "no")
        << " two_sided=" << (is_two_sided(b) ? "yes" : "no") << " depth=" << brace_depth(b)
        << " ord_r=" << solution_order(solution_from_brace(b));
    return out.str();
}

}  // namespace braceforge
