#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "braceforge/brace.hpp"
#include "braceforge/group_io.hpp"
#include "braceforge/named_groups.hpp"
#include "braceforge/reference_braces.hpp"
#include "test_util.hpp"

using namespace braceforge;

namespace {

// Even permutations of four points in lexicographic order; the order-12
// reference brace indexes its carrier the same way.
std::vector<testutil::Perm> even_perms4() {
    testutil::Perm p{0, 1, 2, 3};
    std::vector<testutil::Perm> out;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

Elt rank_of(const std::vector<testutil::Perm>& all, const testutil::Perm& p) {
    return static_cast<Elt>(std::find(all.begin(), all.end(), p) - all.begin());
}

GroupMorphism identity_map(int n) {
    GroupMorphism f;
    f.map.resize(n);
    for (Elt x = 0; x < n; ++x) f.map[x] = x;
    return f;
}

}  // namespace

TEST_CASE("trivial and almost trivial braces") {
    const FiniteGroup s3 = symmetric(3);

    const SkewBrace triv = trivial_brace(s3);
    CHECK_NOTHROW(verify_skew_brace(triv));
    CHECK(is_two_sided(triv));
    for (const auto& f : lambda_map(triv)) CHECK(f == identity_map(6));

    const SkewBrace almost = almost_trivial_brace(s3);
    CHECK_NOTHROW(verify_skew_brace(almost));
    CHECK(is_two_sided(almost));
    // a o b = b . a makes lambda_a the conjugation by the additive inverse
    for (Elt a = 0; a < 6; ++a)
        for (Elt b = 0; b < 6; ++b)
            CHECK(almost.lambda(a, b) == s3.conjugate(s3.inv[a], b));
    CHECK_FALSE(braces_isomorphic(triv, almost));

    // on an abelian group the two constructions coincide
    const FiniteGroup c6 = cyclic(6);
    CHECK(trivial_brace(c6).mul.table == almost_trivial_brace(c6).mul.table);
    CHECK(braces_isomorphic(trivial_brace(c6), almost_trivial_brace(c6)));
}

TEST_CASE("construction rejects broken table pairs") {
    const FiniteGroup c4 = cyclic(4);

    // a shifted cyclic table is a group whose identity sits at index 2
    std::vector<Elt> shifted(16);
    for (Elt a = 0; a < 4; ++a)
        for (Elt b = 0; b < 4; ++b) shifted[a * 4 + b] = static_cast<Elt>((a + b + 2) % 4);
    try {
        make_skew_brace(4, c4.table, shifted);
        FAIL("expected IdentityMismatch");
    } catch (const IdentityMismatch& e) {
        CHECK(e.which == "circle");
        CHECK(e.found == 2);
    }
    CHECK_THROWS_AS(make_skew_brace(4, shifted, c4.table), IdentityMismatch);

    // a table without any identity is reported by the group validator
    std::vector<Elt> projection(16);
    for (Elt a = 0; a < 4; ++a)
        for (Elt b = 0; b < 4; ++b) projection[a * 4 + b] = a;
    CHECK_THROWS_AS(make_skew_brace(4, projection, c4.table), NoIdentity);

    // two honest groups that do not satisfy the compatibility law
    const FiniteGroup c6 = cyclic(6);
    const FiniteGroup s3 = symmetric(3);
    try {
        make_skew_brace(6, c6.table, s3.table);
        FAIL("expected CompatibilityFailure");
    } catch (const CompatibilityFailure& e) {
        const Elt lhs = s3.op(e.a, c6.op(e.b, e.c));
        const Elt rhs = c6.op(c6.op(s3.op(e.a, e.b), c6.inv[e.a]), s3.op(e.a, e.c));
        CHECK(lhs != rhs);
    }
}

TEST_CASE("order 6 reference brace with additive group S3") {
    const SkewBrace b = symmetric3_cyclic6_brace();
    CHECK_NOTHROW(verify_skew_brace(b));
    CHECK(b.add.table == symmetric(3).table);
    CHECK(are_isomorphic(b.mul, cyclic(6)).has_value());
    CHECK_FALSE(structure_queries(b.add).abelian);
    CHECK(structure_queries(b.mul).abelian);
    CHECK(is_two_sided(b));

    // in the circle group the distinguished transposition keeps order 2 and
    // the other two transpositions reach order 6
    CHECK(b.add.element_order(1) == 2);
    CHECK(b.mul.element_order(1) == 2);
    CHECK(b.mul.element_order(2) == 6);
    CHECK(b.mul.element_order(5) == 6);
    CHECK(b.mul.element_order(3) == 3);
    CHECK(b.mul.element_order(4) == 3);
    CHECK(b.label(2) == "(12)");

    // the lambda family is: conjugation by element 1 on transpositions,
    // identity elsewhere
    const auto lam = lambda_map(b);
    for (Elt a = 0; a < 6; ++a)
        for (Elt x = 0; x < 6; ++x) {
            const Elt expected = b.add.element_order(a) == 2 ? b.add.conjugate(1, x) : x;
            CHECK(lam[a](x) == expected);
        }
}

TEST_CASE("order 8 reference brace with dihedral additive group") {
    const SkewBrace b = dihedral8_quaternion_brace();
    CHECK_NOTHROW(verify_skew_brace(b));
    CHECK(b.add.table == dihedral(4).table);
    CHECK(are_isomorphic(b.mul, dicyclic(2)).has_value());
    CHECK(is_two_sided(b));
    CHECK_FALSE(structure_queries(b.add).abelian);
    CHECK_FALSE(structure_queries(b.mul).abelian);

    // spot values of the transported circle table: r2 o s = (-1)(i) = -i
    // lands on r2s, and rs o rs = k k = -1 lands on r2
    CHECK(b.label(2) == "r2");
    CHECK(b.label(4) == "s");
    CHECK(b.mul.op(2, 4) == 6);
    CHECK(b.mul.op(5, 5) == 2);
}

TEST_CASE("order 12 reference brace is not two-sided") {
    const SkewBrace b = alternating4_brace();
    CHECK_NOTHROW(verify_skew_brace(b));
    CHECK(are_isomorphic(b.add, alternating(4)).has_value());
    CHECK(are_isomorphic(b.mul, group_by_name("C3:C4")).has_value());
    CHECK(two_sided_witness(b).has_value());

    // the published failing instance: with a = (14)(23) and b = c = (234),
    // (a.b) o c lands on (12)(34) while (a o c).c^{-1}.(b o c) lands on (123)
    const auto a4 = even_perms4();
    const Elt a = rank_of(a4, testutil::from_cycles(4, {{0, 3}, {1, 2}}));
    const Elt bb = rank_of(a4, testutil::from_cycles(4, {{1, 2, 3}}));
    const Elt cc = bb;
    CHECK(b.label(a) == "(14)(23)");
    CHECK(b.label(bb) == "(234)");

    const Elt lhs = b.mul.op(b.add.op(a, bb), cc);
    const Elt rhs = b.add.op(b.add.op(b.mul.op(a, cc), b.add.inv[cc]), b.mul.op(bb, cc));
    CHECK(lhs == rank_of(a4, testutil::from_cycles(4, {{0, 1}, {2, 3}})));
    CHECK(rhs == rank_of(a4, testutil::from_cycles(4, {{0, 1, 2}})));
    CHECK(lhs != rhs);
}

TEST_CASE("lambda and mu families satisfy their laws") {
    for (const SkewBrace& b : {symmetric3_cyclic6_brace(), dihedral8_quaternion_brace(),
                               alternating4_brace()}) {
        CHECK_NOTHROW(lambda_map(b));
        CHECK_NOTHROW(mu_map(b));
        const int n = b.size();
        for (Elt x = 0; x < n; ++x) {
            CHECK(bar_inverse(b, x) == b.mul.inv[x]);
            for (Elt y = 0; y < n; ++y) {
                CHECK(b.mul.op(x, y) == b.add.op(x, b.lambda(x, y)));
                CHECK(b.lambda_inv(x, b.lambda(x, y)) == y);
            }
        }
    }

    // a corrupted circle table is caught by the checked accessors
    SkewBrace bad = trivial_brace(cyclic(4));
    bad.mul.table[1 * 4 + 1] = 0;
    CHECK_THROWS_AS(lambda_map(bad), ValidationError);
    CHECK_THROWS_AS(verify_skew_brace(bad), ValidationError);
}

TEST_CASE("from_lambda checks its hypotheses") {
    const FiniteGroup c4 = cyclic(4);
    std::vector<GroupMorphism> f(4, identity_map(4));

    f[1].map = {0, 2, 1, 3};  // swaps two elements, not a homomorphism
    try {
        from_lambda(c4, f);
        FAIL("expected NotAutomorphism");
    } catch (const NotAutomorphism& e) {
        CHECK(e.a == 1);
    }

    f[1].map = {0, 3, 2, 1};  // inversion is an automorphism, but the family
                              // breaks the composition law
    try {
        from_lambda(c4, f);
        FAIL("expected CompositionLawFailure");
    } catch (const CompositionLawFailure& e) {
        CHECK(e.a == 1);
        CHECK(e.b == 2);
    }

    // conjugation by the inverse satisfies the law on any group and lands
    // on the opposite multiplication; the resulting lambda fixes its own
    // subscript, which forces two-sidedness
    const FiniteGroup s3 = symmetric(3);
    std::vector<GroupMorphism> conj(6);
    for (Elt a = 0; a < 6; ++a) {
        conj[a].map.resize(6);
        for (Elt x = 0; x < 6; ++x) conj[a].map[x] = s3.conjugate(s3.inv[a], x);
    }
    const SkewBrace opposite = from_lambda(s3, conj);
    CHECK(opposite.mul.table == almost_trivial_brace(s3).mul.table);
    for (Elt a = 0; a < 6; ++a) CHECK(opposite.lambda(a, a) == a);
    CHECK(is_two_sided(opposite));
}

TEST_CASE("from_dual_lambda rebuilds the additive side") {
    for (const SkewBrace& b : {symmetric3_cyclic6_brace(), dihedral8_quaternion_brace(),
                               alternating4_brace()}) {
        const SkewBrace dual = from_dual_lambda(b.mul, lambda_map(b));
        CHECK(dual.add.table == b.add.table);
        CHECK(dual.mul.table == b.mul.table);
    }

    const FiniteGroup c4 = cyclic(4);
    std::vector<GroupMorphism> f(4, identity_map(4));

    f[1].map = {1, 2, 0, 3};  // moves the identity
    try {
        from_dual_lambda(c4, f);
        FAIL("expected UnitNotFixed");
    } catch (const UnitNotFixed& e) {
        CHECK(e.a == 1);
    }

    // constant swap family: every map fixes 0 but the family is not a
    // homomorphism from the circle group
    for (auto& m : f) m.map = {0, 2, 1, 3};
    try {
        from_dual_lambda(c4, f);
        FAIL("expected CompositionLawFailure");
    } catch (const CompositionLawFailure& e) {
        CHECK(e.a == 0);
        CHECK(e.b == 0);
    }

    // alternating swap family: a homomorphism fixing 0 that still fails the
    // dual compatibility law
    for (Elt a = 0; a < 4; ++a) f[a].map = a % 2 ? std::vector<Elt>{0, 2, 1, 3}
                                                 : std::vector<Elt>{0, 1, 2, 3};
    try {
        from_dual_lambda(c4, f);
        FAIL("expected HypothesisFailure");
    } catch (const HypothesisFailure& e) {
        CHECK(e.a == 1);
        CHECK(e.b == 1);
        CHECK(e.c == 1);
        // the reported triple really does break the law
        const auto& fa = f[e.a];
        const auto& fb = f[e.b];
        auto finv = [&](const GroupMorphism& m, Elt v) {
            for (Elt x = 0; x < 4; ++x)
                if (m(x) == v) return x;
            return kNoElt;
        };
        const Elt lhs = fa(c4.op(e.b, finv(fb, e.c)));
        const Elt fab = fa(e.b);
        const Elt rhs = c4.op(fab, finv(f[fab], fa(e.c)));
        CHECK(lhs != rhs);
    }
}

TEST_CASE("crossed group glues the two structures") {
    const SkewBrace b = symmetric3_cyclic6_brace();
    const FiniteGroup g = crossed_group(b);
    CHECK(g.n == 36);
    CHECK_FALSE(structure_queries(g).abelian);

    // pairs (a, 0) reproduce the additive table, pairs (0, x) the circle one
    for (Elt x = 0; x < 6; ++x)
        for (Elt y = 0; y < 6; ++y) {
            CHECK(g.op(x, y) == b.add.op(x, y));
            CHECK(g.op(x * 6, y * 6) == b.mul.op(x, y) * 6);
        }

    CHECK_THROWS_AS(crossed_group(trivial_brace(cyclic(70))), ResourceError);
}

TEST_CASE("brace isomorphism and canonical keys") {
    const SkewBrace b = symmetric3_cyclic6_brace();

    // transport along a carrier relabelling fixing 0
    const std::vector<Elt> p = {0, 2, 1, 4, 3, 5};
    std::vector<Elt> add(36), mul(36);
    for (Elt x = 0; x < 6; ++x)
        for (Elt y = 0; y < 6; ++y) {
            add[p[x] * 6 + p[y]] = p[b.add.op(x, y)];
            mul[p[x] * 6 + p[y]] = p[b.mul.op(x, y)];
        }
    const SkewBrace c = make_skew_brace(6, add, mul);

    const auto iso = brace_isomorphism(b, c);
    REQUIRE(iso.has_value());
    CHECK(is_homomorphism(b.add, c.add, *iso));
    CHECK(is_homomorphism(b.mul, c.mul, *iso));
    CHECK(canonical_key(b) == canonical_key(c));

    // same additive group, different braces
    const SkewBrace triv = trivial_brace(symmetric(3));
    const SkewBrace almost = almost_trivial_brace(symmetric(3));
    CHECK(canonical_key(triv).add_type == canonical_key(b).add_type);
    CHECK(canonical_key(triv) != canonical_key(b));
    CHECK(canonical_key(triv) != canonical_key(almost));
    CHECK_FALSE(braces_isomorphic(triv, b));

    CHECK_FALSE(braces_isomorphic(trivial_brace(cyclic(4)), trivial_brace(cyclic(6))));
}

TEST_CASE("brace text files round trip") {
    const SkewBrace b = alternating4_brace();
    std::stringstream s;
    write_brace(s, b);
    const SkewBrace back = read_brace(s, "buffer");
    CHECK(back.add.table == b.add.table);
    CHECK(back.mul.table == b.mul.table);
    CHECK(back.add.labels == b.add.labels);

    // truncated input: the additive table parses, the circle table is missing
    std::stringstream t;
    write_group(t, cyclic(3));
    try {
        read_brace(t, "buffer");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("circle table row 0 missing") != std::string::npos);
    }

    // parse problems carry the source location
    std::stringstream u("3\n0 1 2\n1 2 x\n");
    try {
        read_brace(u, "input.brace");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("input.brace:3") != std::string::npos);
    }

    // the reader refuses table pairs that are not braces
    auto rows = [](const FiniteGroup& g) {
        std::string out;
        for (Elt a = 0; a < g.n; ++a) {
            for (Elt bb = 0; bb < g.n; ++bb) {
                if (bb) out += ' ';
                out += std::to_string(g.op(a, bb));
            }
            out += '\n';
        }
        return out;
    };
    std::stringstream v("6\n" + rows(cyclic(6)) + rows(symmetric(3)));
    CHECK_THROWS_AS(read_brace(v, "buffer"), CompatibilityFailure);
}
