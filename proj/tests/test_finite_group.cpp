#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "braceforge/finite_group.hpp"
#include "braceforge/group_io.hpp"
#include "test_util.hpp"

using namespace braceforge;
using testutil::make_cyclic;
using testutil::make_dihedral;
using testutil::make_quaternion;

namespace {

// Exhaustive automorphism count over all bijections fixing 0.  Factorial in
// the order, fine up to 8 and completely independent of the search code.
int brute_force_aut_count(const FiniteGroup& g) {
    std::vector<Elt> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = static_cast<Elt>(i);
    int count = 0;
    do {
        GroupMorphism m{perm};
        if (is_homomorphism(g, g, m)) ++count;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return count;
}

}  // namespace

TEST_CASE("group_from_table accepts cyclic tables and relabels the identity") {
    // C4 written with the identity at index 2: index x stands for the residue
    // x + 2 mod 4, so the entry at (a, b) is the index whose residue is the sum.
    const int n = 4;
    std::vector<Elt> t(16);
    auto residue = [&](int idx) { return (idx + 2) % n; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int sum = (residue(a) + residue(b)) % n;
            t[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>((sum - 2 + n) % n);
        }
    FiniteGroup g = group_from_table(n, t, {"a", "b", "e", "c"});
    CHECK(g.op(0, 0) == 0);
    CHECK(g.label(0) == "e");  // identity label moved along with the element
    CHECK(g.element_order(0) == 1);
    std::vector<int> orders = element_order_profile(g);
    CHECK(orders == std::vector<int>{1, 2, 4, 4});
}

TEST_CASE("group_from_table rejects tables without identity") {
    // Left projection a*b = a has right identities only.
    std::vector<Elt> t(9);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) t[static_cast<std::size_t>(a) * 3 + b] = static_cast<Elt>(a);
    CHECK_THROWS_AS(group_from_table(3, t), NoIdentity);
}

TEST_CASE("group_from_table rejects monoids with missing inverses") {
    // Multiplication mod 4: identity 1, but 0 and 2 have no inverse.
    std::vector<Elt> t(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(a) * 4 + b] = static_cast<Elt>(a * b % 4);
    try {
        group_from_table(4, t);
        FAIL("expected NoInverse");
    } catch (const NoInverse& err) {
        CHECK(err.a == 0);
    }
}

TEST_CASE("group_from_table rejects nonassociative loops with a concrete witness") {
    // C6 with an intercalate swapped: still a Latin square with identity and
    // two sided inverses, but not associative.
    const int n = 6;
    std::vector<Elt> t(36);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>((a + b) % n);
    std::swap(t[1 * n + 1], t[1 * n + 4]);
    std::swap(t[4 * n + 1], t[4 * n + 4]);
    try {
        group_from_table(n, t);
        FAIL("expected NotAssociative");
    } catch (const NotAssociative& err) {
        auto at = [&](Elt x, Elt y) { return t[static_cast<std::size_t>(x) * n + y]; };
        CHECK(at(at(err.a, err.b), err.c) != at(err.a, at(err.b, err.c)));
    }
}

TEST_CASE("element orders, powers, conjugation") {
    FiniteGroup s3 = testutil::make_sym3();
    int involutions = 0, threes = 0;
    for (Elt a = 0; a < s3.n; ++a) {
        const int o = s3.element_order(a);
        if (o == 2) ++involutions;
        if (o == 3) ++threes;
        CHECK(s3.power(a, o) == 0);
        CHECK(s3.power(a, -1) == s3.inverse(a));
    }
    CHECK(involutions == 3);
    CHECK(threes == 2);
    // Conjugation preserves order.
    for (Elt g = 0; g < s3.n; ++g)
        for (Elt a = 0; a < s3.n; ++a)
            CHECK(s3.element_order(s3.conjugate(g, a)) == s3.element_order(a));
}

TEST_CASE("automorphism groups of small groups have the expected size") {
    CHECK(automorphism_group(make_cyclic(1)).size() == 1);
    CHECK(automorphism_group(make_cyclic(9)).size() == 6);
    CHECK(automorphism_group(make_cyclic(6)).size() == 2);
}

TEST_CASE("automorphism search agrees with brute force over all bijections") {
    const FiniteGroup groups[] = {make_cyclic(6), testutil::make_sym3(), testutil::make_klein(),
                                  make_quaternion(), make_dihedral(4)};
    for (const FiniteGroup& g : groups) {
        auto auts = automorphism_group(g);
        CHECK(static_cast<int>(auts.size()) == brute_force_aut_count(g));
        // Sorted, identity first, all valid, closed under composition.
        for (std::size_t i = 1; i < auts.size(); ++i) CHECK(auts[i - 1].map < auts[i].map);
        for (Elt x = 0; x < g.n; ++x) CHECK(auts[0].map[x] == x);
        for (const auto& m : auts) CHECK(is_homomorphism(g, g, m));
    }
}

TEST_CASE("elementary abelian 2-groups have general linear automorphism counts") {
    FiniteGroup c2cubed = testutil::make_direct_product(testutil::make_klein(), make_cyclic(2));
    auto auts = automorphism_group(c2cubed);
    CHECK(auts.size() == 168);  // |GL(3, 2)|
    CHECK(brute_force_aut_count(c2cubed) == 168);
}

TEST_CASE("cyclic 9 automorphisms are exactly the power maps") {
    FiniteGroup c9 = make_cyclic(9);
    auto auts = automorphism_group(c9);
    REQUIRE(auts.size() == 6);
    std::set<int> exponents;
    for (const auto& m : auts) exponents.insert(m.map[1]);
    CHECK(exponents == std::set<int>{1, 2, 4, 5, 7, 8});
}

TEST_CASE("holomorph of C3 is the symmetric group on three letters") {
    HolomorphData h = holomorph(make_cyclic(3));
    CHECK(h.hol.n == 6);
    CHECK(are_isomorphic(h.hol, testutil::make_sym3()).has_value());
    // Pair bookkeeping round trips.
    for (Elt x = 0; x < h.hol.n; ++x)
        CHECK(h.pair_of(h.translation_of(x), h.aut_index_of(x)) == x);
    // The translation copy embeds as stated.
    for (Elt a = 0; a < 3; ++a) CHECK(h.embed_translations[a] == a);
}

TEST_CASE("holomorph of C4 is dihedral of order 8") {
    HolomorphData h = holomorph(make_cyclic(4));
    CHECK(h.hol.n == 8);
    CHECK(are_isomorphic(h.hol, make_dihedral(4)).has_value());
}

TEST_CASE("holomorph of the elementary abelian group of order 8") {
    FiniteGroup c2cubed = testutil::make_direct_product(testutil::make_klein(), make_cyclic(2));
    HolomorphData h = holomorph(c2cubed, 2000);
    CHECK(h.hol.n == 1344);  // 8 * 168
    GroupFacts f = structure_queries(h.hol);
    CHECK_FALSE(f.abelian);
    CHECK_FALSE(f.solvable);  // contains GL(3,2), which is simple
}

TEST_CASE("holomorph materialisation respects its size bound") {
    CHECK_THROWS_AS(holomorph(testutil::make_direct_product(
                        testutil::make_klein(), testutil::make_klein())),
                    ResourceError);  // Hol(C2^4) has order 322560
}

TEST_CASE("structure queries on standard examples") {
    GroupFacts s3 = structure_queries(testutil::make_sym3());
    CHECK_FALSE(s3.abelian);
    CHECK(s3.center.size() == 1);
    CHECK(s3.exponent == 6);
    CHECK(s3.solvable);
    CHECK_FALSE(s3.nilpotent);

    GroupFacts c8 = structure_queries(make_cyclic(8));
    CHECK(c8.abelian);
    CHECK(c8.exponent == 8);
    CHECK(c8.nilpotent);

    GroupFacts a4 = structure_queries(testutil::make_alt4());
    CHECK(a4.center.size() == 1);
    CHECK(a4.exponent == 6);
    CHECK(a4.solvable);
    CHECK_FALSE(a4.nilpotent);

    GroupFacts q8 = structure_queries(make_quaternion());
    CHECK(q8.center.size() == 2);
    CHECK(q8.nilpotent);
    CHECK(q8.exponent == 4);
}

TEST_CASE("quotients: S3 by A3 and A4 by the Klein four group") {
    FiniteGroup s3 = testutil::make_sym3();
    Elt three_cycle = 0;
    for (Elt a = 1; a < s3.n; ++a)
        if (s3.element_order(a) == 3) three_cycle = a;
    Quotient q = quotient(s3, closure(s3, {three_cycle}));
    CHECK(q.group.n == 2);
    for (Elt a = 0; a < s3.n; ++a)
        for (Elt b = 0; b < s3.n; ++b)
            CHECK(q.proj[s3.op(a, b)] == q.group.op(q.proj[a], q.proj[b]));

    FiniteGroup a4 = testutil::make_alt4();
    std::vector<Elt> dps;
    for (Elt a = 1; a < a4.n; ++a)
        if (a4.element_order(a) == 2) dps.push_back(a);
    REQUIRE(dps.size() == 3);
    Quotient q2 = quotient(a4, closure(a4, dps));
    CHECK(q2.group.n == 3);
    CHECK(are_isomorphic(q2.group, make_cyclic(3)).has_value());
}

TEST_CASE("quotient by a non normal subgroup reports a witness") {
    FiniteGroup s3 = testutil::make_sym3();
    Elt transposition = 0;
    for (Elt a = 1; a < s3.n; ++a)
        if (s3.element_order(a) == 2) transposition = a;
    Subgroup h = closure(s3, {transposition});
    try {
        quotient(s3, h);
        FAIL("expected NotNormal");
    } catch (const NotNormal& err) {
        CHECK(h.contains(err.h));
        CHECK_FALSE(h.contains(s3.conjugate(err.g, err.h)));
    }
}

TEST_CASE("isomorphism checks distinguish and identify order 8 and order 6 groups") {
    CHECK(are_isomorphic(make_cyclic(6),
                         testutil::make_direct_product(make_cyclic(2), make_cyclic(3)))
              .has_value());
    CHECK_FALSE(are_isomorphic(make_quaternion(), make_dihedral(4)).has_value());
    CHECK_FALSE(are_isomorphic(make_cyclic(8), make_dihedral(4)).has_value());
    CHECK(are_isomorphic(testutil::make_sym3(), make_dihedral(3)).has_value());
    auto m = are_isomorphic(testutil::make_sym3(), make_dihedral(3));
    REQUIRE(m.has_value());
    CHECK(is_homomorphism(testutil::make_sym3(), make_dihedral(3), *m));
}

TEST_CASE("subgroup lattice sizes of small groups") {
    CHECK(all_subgroups(testutil::make_sym3()).size() == 6);
    CHECK(all_subgroups(testutil::make_klein()).size() == 5);
    CHECK(all_subgroups(make_quaternion()).size() == 6);
    CHECK(all_subgroups(make_cyclic(12)).size() == 6);  // one per divisor
    // Every reported subgroup really is one.
    FiniteGroup a4 = testutil::make_alt4();
    auto subs = all_subgroups(a4);
    CHECK(subs.size() == 10);
    for (const auto& s : subs) CHECK(is_subgroup(a4, s));
}

TEST_CASE("generating sequences are small and generate") {
    for (const FiniteGroup& g : {make_cyclic(6), testutil::make_sym3(), make_quaternion(),
                                 testutil::make_alt4()}) {
        auto gens = generating_sequence(g);
        CHECK(gens.size() <= 3);
        CHECK(closure(g, gens).size() == g.n);
    }
}

TEST_CASE("group text format round trips with labels") {
    FiniteGroup d4 = make_dihedral(4);
    d4.labels = {"1", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    std::ostringstream out;
    write_group(out, d4);
    std::istringstream in(out.str());
    FiniteGroup back = read_group(in, "roundtrip");
    CHECK(back.n == d4.n);
    CHECK(back.table == d4.table);
    CHECK(back.labels == d4.labels);
}

TEST_CASE("group parser rejects malformed input with location info") {
    auto expect_parse_error = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_group(in, "bad");
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& err) {
            CHECK(std::string(err.what()).find("bad:") == 0);
            CHECK(std::string(err.what()).find(needle) != std::string::npos);
        }
    };
    expect_parse_error("", "empty");
    expect_parse_error("2\n0 1\n", "missing");
    expect_parse_error("2\n0 1\n1 0 0\n", "expected 2");
    expect_parse_error("2\n0 1\n1 x\n", "integer");
    expect_parse_error("2\n0 1\n1 0\n5\n", "unexpected content");
    expect_parse_error("2\n0 1\n1 7\n", "out of range");
}

TEST_CASE("parsed tables still go through full validation") {
    // A Latin square with identity that is not a group must be rejected.
    std::istringstream in("5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n");
    CHECK_THROWS_AS(read_group(in, "loop"), ValidationError);
}
