#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/finite_group.hpp"

namespace braceforge {

// A skew brace puts two group structures on one element set. We call the
// first one additive and write a.b and a^{-1} even though it need not be
// commutative; the second one is the circle operation, written a o b, with
// inverse a-bar. Both tables live on the carrier {0, ..., n-1}, share the
// identity 0, and are tied together by the compatibility law
//
//     a o (b . c)  =  (a o b) . a^{-1} . (a o c).
//
// A brace with abelian additive group is called classical; one where both
// operations coincide is called trivial.
struct SkewBrace {
    FiniteGroup add;
    FiniteGroup mul;

    int size() const { return add.n; }

    // lambda_a(b) = a^{-1} . (a o b). Each lambda_a is an additive
    // automorphism and a -> lambda_a is a homomorphism from the circle
    // group into Aut(add); see lambda_map for the checked version.
    Elt lambda(Elt a, Elt b) const { return add.op(add.inv[a], mul.op(a, b)); }

    // Inverse of lambda_a, which coincides with lambda of the circle
    // inverse of a.
    Elt lambda_inv(Elt a, Elt b) const { return lambda(mul.inv[a], b); }

    // Circle inverse a-bar.
    Elt bar(Elt a) const { return mul.inv[a]; }

    // mu_b(a) = bar(lambda_a(b)) o a o b, the companion family of lambda;
    // the subscript comes first, matching lambda's argument order.
    Elt mu(Elt b, Elt a) const { return mul.op(mul.op(bar(lambda(a, b)), a), b); }

    std::string label(Elt a) const { return add.label(a); }
};

// The carrier convention puts the shared identity at index 0. A table whose
// identity sits elsewhere is rejected instead of silently relabelled, since
// relabelling one table would detach it from the other.
struct IdentityMismatch : ValidationError {
    std::string which;  // "additive" or "circle"
    Elt found;
    IdentityMismatch(std::string which_, Elt found_)
        : ValidationError("the " + which_ + " identity sits at index " +
                          std::to_string(found_) + ", expected 0"),
          which(std::move(which_)),
          found(found_) {}
};

struct CompatibilityFailure : ValidationError {
    Elt a, b, c;
    CompatibilityFailure(Elt a_, Elt b_, Elt c_)
        : ValidationError("compatibility fails at (a, b, c) = (" + std::to_string(a_) +
                          ", " + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_),
          b(b_),
          c(c_) {}
};

// Validates both tables as groups sharing the identity 0, then checks the
// compatibility law over all triples. Labels, when given, are attached to
// both groups.
SkewBrace make_skew_brace(int n, std::vector<Elt> add_table, std::vector<Elt> mul_table,
                          std::vector<std::string> labels = {});

// Re-runs every structural check on an already assembled value, including
// the consistency of the cached inverse arrays.
void verify_skew_brace(const SkewBrace& b);

// All lambda maps as explicit permutations, with the automorphism and
// homomorphism properties re-checked; a failure means the value was
// corrupted after construction.
std::vector<GroupMorphism> lambda_map(const SkewBrace& b);

// All mu maps, with mu_0 = id and mu_{a o b} = mu_b mu_a re-checked.
std::vector<GroupMorphism> mu_map(const SkewBrace& b);

// The circle inverse recovered from the additive side: the preimage of
// a^{-1} under lambda_a. Agrees with mul's inverse array on any valid brace.
Elt bar_inverse(const SkewBrace& b, Elt a);

struct NotAutomorphism : ValidationError {
    Elt a;
    explicit NotAutomorphism(Elt a_)
        : ValidationError("map of element " + std::to_string(a_) +
                          " is not an automorphism of the given group"),
          a(a_) {}
};

struct CompositionLawFailure : ValidationError {
    Elt a, b;
    CompositionLawFailure(Elt a_, Elt b_)
        : ValidationError("lambda composition law fails at (a, b) = (" +
                          std::to_string(a_) + ", " + std::to_string(b_) + ")"),
          a(a_),
          b(b_) {}
};

// Builds the brace with the given additive group and a o b = a . f_a(b).
// Every f_a must be an additive automorphism and the family must satisfy
// f_{a . f_a(b)} = f_a f_b; the circle operation then closes into a group
// by itself.
SkewBrace from_lambda(const FiniteGroup& add, const std::vector<GroupMorphism>& f);

struct UnitNotFixed : ValidationError {
    Elt a;
    explicit UnitNotFixed(Elt a_)
        : ValidationError("map of element " + std::to_string(a_) +
                          " does not fix the identity"),
          a(a_) {}
};

struct HypothesisFailure : ValidationError {
    Elt a, b, c;
    HypothesisFailure(Elt a_, Elt b_, Elt c_)
        : ValidationError("dual lambda law fails at (a, b, c) = (" + std::to_string(a_) +
                          ", " + std::to_string(b_) + ", " + std::to_string(c_) + ")"),
          a(a_),
          b(b_),
          c(c_) {}
};

// Builds the brace with the given circle group and a . b = a o f_a^{-1}(b).
// Each f_a must be a permutation of the carrier fixing 0, a -> f_a must be
// a homomorphism from the circle group into the symmetric group, and
//
//     f_a(b o f_b^{-1}(c)) = f_a(b) o f_{f_a(b)}^{-1}(f_a(c))
//
// must hold for all triples; the additive operation then closes into a
// group by itself.
SkewBrace from_dual_lambda(const FiniteGroup& mul, const std::vector<GroupMorphism>& f);

// A brace is two-sided when (a . b) o c = (a o c) . c^{-1} . (b o c) holds
// for all triples. Returns the first triple breaking that law, if any.
std::optional<std::array<Elt, 3>> two_sided_witness(const SkewBrace& b);
bool is_two_sided(const SkewBrace& b);

// The group on pairs (a, x) with (a, x)(b, y) = (a . lambda_x(b), x o y).
// Pair (a, x) sits at index x*n + a, so the additive group embeds as the
// first n elements and the circle group as the indices divisible by n.
// Guarded by the same table budget as holomorph().
FiniteGroup crossed_group(const SkewBrace& b, int max_order = 4096);

// An additive isomorphism that also transports the circle table, if any.
std::optional<GroupMorphism> brace_isomorphism(const SkewBrace& x, const SkewBrace& y);
bool braces_isomorphic(const SkewBrace& x, const SkewBrace& y);

// Complete invariant of the isomorphism class: the additive catalogue slot
// plus the smallest circle table obtainable by transporting mul through an
// additive isomorphism onto the catalogue representative. Two braces get
// equal keys exactly when they are isomorphic. Requires the order to be
// covered by the catalogue.
struct BraceKey {
    int order = 0;
    int add_type = 0;            // position within catalogue_order(order)
    std::vector<Elt> mul_table;  // transported, lexicographically least
    auto operator<=>(const BraceKey&) const = default;
};
BraceKey canonical_key(const SkewBrace& b);

// a o b = a . b, the trivial brace on a group.
SkewBrace trivial_brace(const FiniteGroup& g);

// a o b = b . a. Always a two-sided brace; coincides with the trivial one
// exactly on abelian groups.
SkewBrace almost_trivial_brace(const FiniteGroup& g);

// Text format: order line, n additive rows, n circle rows, then optional
// '# <index> <name>' label lines. Blank lines are ignored; the writer puts
// one between the tables.
SkewBrace read_brace(std::istream& in, const std::string& source);
SkewBrace read_brace_file(const std::string& path);
void write_brace(std::ostream& out, const SkewBrace& b);
void write_brace_file(const std::string& path, const SkewBrace& b);

}  // namespace braceforge
