#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

// An ideal of a skew brace is a subgroup of the circle group that is normal
// there, has matching additive cosets aI = Ia, and is stable under every
// lambda_a.  Ideals are exactly the subsets one can quotient by: both
// operations descend to the cosets.

struct IdealCheck {
    bool ok = false;
    std::string failed;  // first failing condition, empty when ok

    explicit operator bool() const { return ok; }
};

IdealCheck check_ideal(const SkewBrace& b, const Subgroup& candidate);
bool is_ideal(const SkewBrace& b, const Subgroup& candidate);

// Every ideal, found by filtering the subgroups of the circle group; sorted
// by size, then element list.
std::vector<Subgroup> all_ideals(const SkewBrace& b);

// The socle: elements a with a o b = ab and b(b o a) = (b o a)b for all b.
// Computed both from that definition and as ker lambda intersected with the
// additive centre; the two must agree, and the result must pass check_ideal.
Subgroup socle(const SkewBrace& b);

// Quotient brace A/I together with the projection onto coset indices.  The
// coset of 0 gets index 0; the rest are ordered by their smallest element.
struct BraceQuotient {
    SkewBrace brace;
    std::vector<Elt> proj;
};

BraceQuotient quotient_brace(const SkewBrace& b, const Subgroup& ideal);

// The brace structure induced on a subset that is an additive subgroup and
// closed under the circle operation; elements are renumbered by position.
SkewBrace sub_brace(const SkewBrace& b, const Subgroup& s);

// Iterated socle quotients.  quotients[k] is the k-th quotient (index 0 is
// the brace itself); the chain stops once a quotient is trivial or has
// trivial socle.  s_chain is the increasing ideal chain S_1 = Soc(A),
// S_{n+1} = {a : (a o b)^{-1} a b and [b, b o a] lie in S_n for all b},
// computed independently on the original carrier; the (n+1)-th quotient is
// isomorphic to A / S_n.  level is the least n with |quotients[n-1]| = 1,
// empty when the chain stalls at a nontrivial brace with trivial socle.
struct SocleSeries {
    std::vector<SkewBrace> quotients;
    std::vector<Subgroup> s_chain;
    std::optional<int> level;
};

SocleSeries socle_series(const SkewBrace& b);
std::optional<int> multipermutation_level(const SkewBrace& b);

// More than one element and no ideals besides 1 and A.
bool is_simple(const SkewBrace& b);

struct AddNotNilpotent : ValidationError {
    AddNotNilpotent() : ValidationError("additive group is not nilpotent") {}
};

// For a brace with nilpotent additive group, the set of elements whose
// additive order only involves the given primes is a sub-brace (the primes
// not dividing the order contribute nothing).  Throws AddNotNilpotent.
SkewBrace hall_sub_brace(const SkewBrace& b, const std::vector<int>& primes);

// One sub-brace per prime dividing the order, ascending: the Sylow
// subgroups of a nilpotent additive group carry the brace structure.
std::vector<SkewBrace> sylow_sub_braces(const SkewBrace& b);

// Structural facts plus the implications the theory promises between them.
// Each implication method is true when its hypothesis fails or its
// conclusion holds, so a false value is a genuine counterexample.
struct StructuralChecks {
    bool add_nilpotent = false;
    bool add_solvable = false;
    bool mul_solvable = false;
    bool mul_abelian = false;
    bool finite_level = false;
    int socle_index = 0;              // [A : Soc(A)]
    bool power_map_additive = false;  // a -> a^socle_index additive endomorphism

    bool nilpotent_add_gives_solvable_mul() const { return !add_nilpotent || mul_solvable; }
    bool finite_level_gives_nilpotent_add() const { return !finite_level || add_nilpotent; }
    bool abelian_mul_gives_solvable_add() const { return !mul_abelian || add_solvable; }
};

StructuralChecks structural_theorem_checks(const SkewBrace& b);

// One line: order, catalogue names of both groups, socle size, level,
// simplicity, two-sidedness, depth, and the order of the canonical solution.
std::string structural_summary(const SkewBrace& b);

}  // namespace braceforge
