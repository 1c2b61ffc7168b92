#pragma once

#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/finite_group.hpp"

namespace braceforge {

// Group-theoretic brace factories: exact factorizations, bijective
// 1-cocycles, matched pairs (of groups and of braces), semidirect, double
// and wreath products, and the passage between braces and triply factorized
// groups. Everything here works on explicit tables and validates its own
// hypotheses before building anything.

// g = b * c with b and c running through two subgroups that intersect only
// in the identity and whose sizes multiply to |G|; every element then splits
// in exactly one way, recorded per element in left and right.
struct ExactFactorization {
    FiniteGroup g;
    Subgroup b, c;
    std::vector<Elt> left;   // the B part of each element
    std::vector<Elt> right;  // the C part of each element
};

// Checks both subsets are subgroups, that they meet only in 0 and cover g by
// size, then fills in the decomposition. Throws ValidationError otherwise.
ExactFactorization exact_factorization(const FiniteGroup& g, const Subgroup& b,
                                       const Subgroup& c);

// The brace on the carrier of g with the group itself as addition and
//
//     a o a'  =  b . a' . c      where a = b . c,
//
// whose circle group is isomorphic to B x C; that isomorphism is asserted
// before returning.
SkewBrace brace_from_exact_factorization(const ExactFactorization& f);

struct CocycleLawFailure : ValidationError {
    Elt g, h;
    CocycleLawFailure(Elt g_, Elt h_)
        : ValidationError("pi(g h) != pi(g) . (g . pi(h)) at (g, h) = (" + std::to_string(g_) +
                          ", " + std::to_string(h_) + ")"),
          g(g_),
          h(h_) {}
};

// A bijection pi from g onto a, twisted by an action of g on a through
// automorphisms, satisfying pi(gh) = pi(g) . (g . pi(h)). Such a map carries
// the multiplication of g over to a second group structure on a's carrier.
struct BijectiveCocycle {
    FiniteGroup g;
    FiniteGroup a;
    std::vector<GroupMorphism> action;  // one automorphism of a per element of g
    std::vector<Elt> pi;
};

// Validates every hypothesis: the action maps are automorphisms of a and
// compose along g, pi is a bijection, and the cocycle law holds (throwing
// CocycleLawFailure at the first broken pair).
BijectiveCocycle make_bijective_cocycle(FiniteGroup g, FiniteGroup a,
                                        std::vector<GroupMorphism> action, std::vector<Elt> pi);

// Derives the only action that could make the bijection pi a cocycle,
// namely g . v = pi(g)^{-1} . pi(g pi^{-1}(v)), then validates the result.
// Fails exactly when pi is not a cocycle for any action.
BijectiveCocycle cocycle_from_bijection(const FiniteGroup& g, const FiniteGroup& a,
                                        std::vector<Elt> pi);

// The brace on a's carrier with addition a and u o v = pi(pi^{-1}(u) pi^{-1}(v)).
SkewBrace brace_from_cocycle(const BijectiveCocycle& c);

// The inverse passage: the identity map on the carrier is a cocycle from the
// circle group to the additive group, twisted by the lambda action. Feeding
// the result back through brace_from_cocycle reproduces the same tables.
BijectiveCocycle cocycle_from_brace(const SkewBrace& b);

// Two groups acting on each other, written b -> a for the action of b on the
// a side and b <- a for the action of a on the b side. Both tables are
// indexed [actor from b * a.n + argument from a]. The compatibility laws
//
//     b -> (a a')   =  (b -> a) . ((b <- a) -> a')
//     (b b') <- a   =  (b <- (b' -> a)) . (b' <- a)
//
// make the pair product below associative.
struct MatchedPairGroups {
    FiniteGroup a, b;
    std::vector<Elt> to_a;  // b -> a, a value in a
    std::vector<Elt> to_b;  // b <- a, a value in b
};

// Checks the two tables are genuine actions (identity row trivial, rows
// compose along the acting group) and that the compatibility laws hold.
MatchedPairGroups make_matched_pair(FiniteGroup a, FiniteGroup b, std::vector<Elt> to_a,
                                    std::vector<Elt> to_b);

// The matched pair hiding inside an exact factorization g = B C: moving a
// C element past a B element and re-splitting the product defines both
// actions, and the pair product below rebuilds g.
MatchedPairGroups matched_pair_from_factorization(const ExactFactorization& f);

// Every brace matches its circle group with itself: x -> y is lambda_x(y)
// and x <- y is mu_y(x). The pair product below is then the group of pairs
// (a, x) from crossed_group in disguise.
MatchedPairGroups matched_pair_groups_from_brace(const SkewBrace& x);

// The group on pairs with (a, b)(a', b') = (a . (b -> a'), (b <- a') . b'),
// pair (a, b) at index a * b.n + b.
FiniteGroup biproduct_group(const MatchedPairGroups& m);

// The brace on the same pairs whose addition is the biproduct product and
// whose circle operation is (a, b) o (a', b') = (a a', b' b), the direct
// product with the b side reversed.
SkewBrace biproduct_brace(const MatchedPairGroups& m);

struct NotBraceAutomorphism : ValidationError {
    Elt a;
    explicit NotBraceAutomorphism(Elt a_)
        : ValidationError("map of element " + std::to_string(a_) +
                          " does not preserve both brace operations"),
          a(a_) {}
};

// Componentwise addition and circle operation on pairs, index a * y.n + b.
SkewBrace direct_product_brace(const SkewBrace& x, const SkewBrace& y);

// The brace on pairs with componentwise addition and
//
//     (a, b) o (a', b')  =  (a o a', b o alpha_a(b')),
//
// for an action alpha of the circle group of x on y by maps preserving both
// of y's operations. Throws NotBraceAutomorphism for a map that fails that,
// ValidationError when the family does not compose along x's circle group.
SkewBrace semidirect_brace_left(const SkewBrace& x, const SkewBrace& y,
                                const std::vector<GroupMorphism>& alpha);

// Mirror image: (a, b) o (a', b') = (a o beta_b(a'), b o b') for an action
// beta of the circle group of y on x.
SkewBrace semidirect_brace_right(const SkewBrace& x, const SkewBrace& y,
                                 const std::vector<GroupMorphism>& beta);

// x acting on itself through its own lambda family. That family preserves
// the circle operation exactly when
//
//     lambda_a lambda_b  =  lambda_{lambda_a(b)} lambda_a
//
// for all a, b; the first failing pair is reported otherwise. The result is
// a brace of order n^2.
SkewBrace double_brace(const SkewBrace& x);

struct NotPermutationRep : ValidationError {
    explicit NotPermutationRep(std::string why)
        : ValidationError("not a permutation representation: " + std::move(why)) {}
};

// The brace on m-tuples over x paired with y, with componentwise addition
// and circle operation twisting the tuple by coordinate permutations:
//
//     (t, b) o (t', b')  =  (t o delta_b(t'), b o b'),
//
// where delta_b places the old coordinate rep[b][i] at position i. The rows
// of rep must be permutations of 0..m-1 composing as
// rep[b o b'][i] = rep[b'][rep[b][i]], which is what coordinate shuffling
// needs; for an abelian circle group this is the usual homomorphism
// condition. Tuples are indexed with coordinate 0 most significant, and the
// pair (t, b) sits at index t * y.n + b.
SkewBrace wreath_brace(const SkewBrace& x, const SkewBrace& y,
                       const std::vector<std::vector<Elt>>& rep);

// A group seen through three subgroups, any two of which already cover it:
// g = a.m = b.m = a.b elementwise, with a and m, and b and m, meeting only
// in the identity.
struct TriplyFactorizedGroup {
    FiniteGroup g;
    Subgroup a, b, m;
};

// Validates all three coverings and both trivial intersections.
TriplyFactorizedGroup make_triply_factorized(FiniteGroup g, Subgroup a, Subgroup b, Subgroup m);

// The triple living inside the group of pairs from crossed_group: a is the
// additive copy (pairs (v, 0)), m the circle copy (pairs (0, x)) and b the
// diagonal (pairs (x, x)); a and b also meet only in the identity.
TriplyFactorizedGroup triply_factorized_from_brace(const SkewBrace& x);

// The defining conditions are symmetric in the a and m slots, but the
// reconstruction below wants its normal subgroup in the m slot while the
// factory above puts the additive copy (the normal one) in a. Swapping the
// two slots, with revalidation, bridges the two.
TriplyFactorizedGroup swap_am(const TriplyFactorizedGroup& t);

struct GammaUndefined : ValidationError {
    Elt m;
    int candidates;
    GammaUndefined(Elt m_, int candidates_)
        : ValidationError("element " + std::to_string(m_) + " has " +
                          std::to_string(candidates_) + " completions into the b factor, not 1"),
          m(m_),
          candidates(candidates_) {}
};

// Sysak's reconstruction: when m is normal and a meets b trivially, each
// element of m extends in exactly one way into b by an a element gamma(m),
// and m with its own multiplication as addition and
//
//     m o m'  =  gamma^{-1}(gamma(m) gamma(m'))
//
// is a brace whose group of pairs is isomorphic to g via (m, x) -> m gamma(x);
// that isomorphism is asserted before returning. Throws GammaUndefined when
// the extension count is off (possible only for tuples built by hand).
SkewBrace sysak_brace(const TriplyFactorizedGroup& t);

struct MatchedBraceLawFailure : ValidationError {
    std::string law;  // which equation broke
    Elt a, b;
    MatchedBraceLawFailure(std::string law_, Elt a_, Elt b_)
        : ValidationError("matched pair law " + law_ + " fails at (a, b) = (" +
                          std::to_string(a_) + ", " + std::to_string(b_) + ")"),
          law(std::move(law_)),
          a(a_),
          b(b_) {}
};

// Two braces acting on each other's additive groups: alpha maps x's circle
// group into additive automorphisms of y, beta the other way round. The two
// exchange laws, checked pointwise over the argument,
//
//     lambda_a  beta_b   =  beta_{alpha_a(b)}  lambda_{beta^{-1}_{alpha_a(b)}(a)}
//     lambda_b  alpha_a  =  alpha_{beta_b(a)}  lambda_{alpha^{-1}_{beta_b(a)}(b)}
//
// (the first over x, the second over y) are reported through
// MatchedBraceLawFailure with the law names "lambda-beta" and "lambda-alpha".
struct MatchedPairBraces {
    SkewBrace x, y;
    std::vector<GroupMorphism> alpha;  // one additive automorphism of y per element of x
    std::vector<GroupMorphism> beta;   // one additive automorphism of x per element of y
};

MatchedPairBraces make_matched_pair_braces(SkewBrace x, SkewBrace y,
                                           std::vector<GroupMorphism> alpha,
                                           std::vector<GroupMorphism> beta);

// The brace on pairs (index a * y.n + b) with componentwise addition and
//
//     (a, b) o (a', b')  =  (beta_b(beta_b^{-1}(a) o a'), alpha_a(alpha_a^{-1}(b) o b')).
//
// Before assembling the tables, the two splitting identities this formula
// relies on,
//
//     alpha_a(alpha_a^{-1}(b) o w)  =  b o alpha_{beta_b^{-1}(a)}(w)
//     beta_b(beta_b^{-1}(a) o v)    =  a o beta_{alpha_a^{-1}(b)}(v),
//
// are asserted for every triple and reported as "alpha-splitting" and
// "beta-splitting" failures.
SkewBrace biproduct_brace(const MatchedPairBraces& p);

}  // namespace braceforge
