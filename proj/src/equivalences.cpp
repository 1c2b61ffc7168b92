#include "braceforge/equivalences.hpp"

#include <utility>

namespace braceforge {

namespace {

void check_table(const FiniteGroup& g, const std::vector<Elt>& t, const char* what) {
    if (static_cast<int>(t.size()) != g.n * g.n)
        throw ValidationError(std::string(what) +
                              " table does not match the group order");
    for (Elt v : t)
        if (v >= g.n)
            throw ValidationError(std::string(what) + " table entry out of range");
}

}  // namespace

SkewCycleSet make_skew_cycle_set(FiniteGroup group, std::vector<Elt> bullet) {
    check_table(group, bullet, "the bullet");
    const int n = group.n;
    std::vector<Elt> star(static_cast<std::size_t>(n) * n, kNoElt);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            Elt& back = star[static_cast<std::size_t>(a) * n +
                             bullet[static_cast<std::size_t>(a) * n + b]];
            if (back != kNoElt)
                throw CycleSetAxiomFailure("bullet(a, -) is a bijection", a, back, b);
            back = b;
        }

    SkewCycleSet s{std::move(group), std::move(bullet), std::move(star)};
    const FiniteGroup& g = s.group;
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            for (Elt c = 0; c < n; ++c) {
                if (s.bul(a, g.op(b, c)) != g.op(s.bul(a, b), s.bul(a, c)))
                    throw CycleSetAxiomFailure(
                        "bullet(a, b c) = bullet(a, b) bullet(a, c)", a, b, c);
                if (s.bul(g.op(a, b), c) != s.bul(s.bul(a, b), s.bul(a, c)))
                    throw CycleSetAxiomFailure(
                        "bullet(a b, c) = bullet(bullet(a, b), bullet(a, c))", a, b, c);
            }
    return s;
}

SkewCycleSet cycle_set_from_brace(const SkewBrace& x) {
    const int n = x.size();
    std::vector<Elt> bullet(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            bullet[static_cast<std::size_t>(a) * n + b] = x.lambda_inv(a, b);
    return make_skew_cycle_set(x.add, std::move(bullet));
}

SkewBrace brace_from_cycle_set(const SkewCycleSet& s) {
    const int n = s.size();
    std::vector<Elt> mul(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            mul[static_cast<std::size_t>(a) * n + b] = s.group.op(a, s.unbul(a, b));
    return make_skew_brace(n, s.group.table, std::move(mul), s.group.labels);
}

BraceMatchedPair make_brace_matched_pair(FiniteGroup group, std::vector<Elt> harpoon_r,
                                         std::vector<Elt> harpoon_l) {
    check_table(group, harpoon_r, "the right harpoon");
    check_table(group, harpoon_l, "the left harpoon");
    BraceMatchedPair m{std::move(group), std::move(harpoon_r), std::move(harpoon_l)};
    const FiniteGroup& g = m.group;
    const int n = g.n;

    for (Elt b = 0; b < n; ++b) {
        if (m.r(0, b) != b) throw MatchedPairAxiomFailure("1 -> b = b", 0, b);
        if (m.l(b, 0) != b) throw MatchedPairAxiomFailure("a <- 1 = a", b, 0);
    }
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            if (g.op(a, b) != g.op(m.r(a, b), m.l(a, b)))
                throw MatchedPairAxiomFailure("a o b = (a -> b) o (a <- b)", a, b);
            for (Elt c = 0; c < n; ++c) {
                if (m.r(g.op(a, b), c) != m.r(a, m.r(b, c)))
                    throw MatchedPairAxiomFailure("(a o b) -> c = a -> (b -> c)", a, b);
                if (m.l(a, g.op(b, c)) != m.l(m.l(a, b), c))
                    throw MatchedPairAxiomFailure("a <- (b o c) = (a <- b) <- c", a, b);
                if (m.r(a, g.op(b, c)) != g.op(m.r(a, b), m.r(m.l(a, b), c)))
                    throw MatchedPairAxiomFailure(
                        "a -> (b o c) = (a -> b) o ((a <- b) -> c)", a, b);
                if (m.l(g.op(a, b), c) != g.op(m.l(a, m.r(b, c)), m.l(b, c)))
                    throw MatchedPairAxiomFailure(
                        "(a o b) <- c = (a <- (b -> c)) o (b <- c)", a, b);
            }
        }
    return m;
}

BraceMatchedPair matched_pair_from_brace(const SkewBrace& x) {
    const int n = x.size();
    std::vector<Elt> hr(static_cast<std::size_t>(n) * n);
    std::vector<Elt> hl(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b) {
            hr[static_cast<std::size_t>(a) * n + b] = x.lambda(a, b);
            hl[static_cast<std::size_t>(a) * n + b] = x.mu(b, a);
        }
    return make_brace_matched_pair(x.mul, std::move(hr), std::move(hl));
}

SkewBrace brace_from_matched_pair(const BraceMatchedPair& m) {
    const int n = m.size();
    std::vector<Elt> add(static_cast<std::size_t>(n) * n);
    for (Elt a = 0; a < n; ++a)
        for (Elt b = 0; b < n; ++b)
            add[static_cast<std::size_t>(a) * n + b] =
                m.group.op(a, m.r(m.group.inv[a], b));
    return make_skew_brace(n, std::move(add), m.group.table, m.group.labels);
}

}  // namespace braceforge
