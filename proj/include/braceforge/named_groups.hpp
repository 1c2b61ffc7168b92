#ifndef BRACEFORGE_NAMED_GROUPS_HPP
#define BRACEFORGE_NAMED_GROUPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "braceforge/finite_group.hpp"

namespace braceforge {

// Standard constructions.  Every builder routes through group_from_table, so
// a faulty table is rejected at construction time.

FiniteGroup cyclic(int n);

// Order 2m: pairs r^i s^e with s r s = r^-1, indexed e*m + i.
FiniteGroup dihedral(int m);

// Order 4m: a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1.  Indexed e*2m + i for
// a^i b^e.  Requires m >= 2; dicyclic(2) is the quaternion group.
FiniteGroup dicyclic(int m);

// Pairs (x, y) indexed x * b.n + y.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// N x| H for a homomorphism H -> Aut(N) given elementwise: (x,h)(y,k) =
// (x phi_h(y), hk), indexed h * n.n + x.  Validates that each image is an
// automorphism and that phi respects the multiplication of H.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& h,
                               const std::vector<GroupMorphism>& phi);

// N x| C_k driven by a single automorphism with order dividing k.
FiniteGroup semidirect_cyclic(const FiniteGroup& n, int k, const GroupMorphism& alpha);

// Permutation group generated by image arrays on 0..degree-1.  Elements are
// sorted lexicographically, which puts the identity first.
FiniteGroup from_permutations(int degree, const std::vector<std::vector<Elt>>& gens);

FiniteGroup symmetric(int k);    // k <= 5
FiniteGroup alternating(int k);  // k <= 5
FiniteGroup special_linear_2_3();
FiniteGroup projective_special_linear_2_7();

// x -> x^-1 as a morphism; an automorphism exactly when g is abelian.
GroupMorphism inversion_map(const FiniteGroup& g);

// x -> x^u on a cyclic group written additively as residues.
GroupMorphism power_map(const FiniteGroup& cyclic_group, int u);

// Catalogue of all isomorphism classes of groups of order n, 1 <= n <= 31,
// in a fixed published order (the order-8 and order-12 sequences follow the
// usual small-group numbering: C8, C4xC2, C4:C2, Q8, C2^3 and C3:C4, C12,
// A4, C6:C2, C6xC2).  Built on demand and cached.
struct NamedGroup {
    std::string name;
    FiniteGroup group;
};

constexpr int kCatalogueMaxOrder = 31;

const std::vector<NamedGroup>& catalogue_order(int n);

// Name of the catalogue entry isomorphic to g; nullopt when the order falls
// outside the catalogue.  The catalogue is complete for its orders, so a
// failed match there means a broken table and throws.
std::optional<std::string> catalogue_name(const FiniteGroup& g);

// Looks a name up across the catalogue plus the larger named groups used by
// the command line tool (A5, PSL27).  Throws ValidationError if unknown.
FiniteGroup group_by_name(const std::string& name);

}  // namespace braceforge

#endif
