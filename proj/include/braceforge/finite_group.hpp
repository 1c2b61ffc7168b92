#ifndef BRACEFORGE_FINITE_GROUP_HPP
#define BRACEFORGE_FINITE_GROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "braceforge/errors.hpp"

namespace braceforge {

// Elements of a finite group are indices 0..n-1; index 0 is always the
// identity.  Orders stay well below 65536 throughout, so a 16 bit index is
// enough and keeps the flat Cayley tables compact.
using Elt = std::uint16_t;

constexpr Elt kNoElt = 0xFFFF;

struct FiniteGroup {
    int n = 0;
    std::vector<Elt> table;           // table[a * n + b] is the product ab
    std::vector<Elt> inv;             // two sided inverses
    std::vector<std::string> labels;  // optional display names, empty or size n

    Elt op(Elt a, Elt b) const {
        return table[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + b];
    }
    Elt inverse(Elt a) const { return inv[a]; }

    // g a g^-1
    Elt conjugate(Elt g, Elt a) const { return op(op(g, a), inv[g]); }

    // a^-1 b^-1 a b
    Elt commutator(Elt a, Elt b) const { return op(op(inv[a], inv[b]), op(a, b)); }

    int element_order(Elt a) const;
    Elt power(Elt a, long long k) const;
    std::string label(Elt a) const;
};

// Total map between two groups, stored as an image array.  Validity against a
// concrete pair of groups is checked by is_homomorphism; the struct itself is
// just the data.
struct GroupMorphism {
    std::vector<Elt> map;

    Elt operator()(Elt a) const { return map[a]; }
    bool operator==(const GroupMorphism& o) const { return map == o.map; }
};

// Subgroup of an ambient group, as a sorted element list containing 0.
struct Subgroup {
    std::vector<Elt> elems;

    bool contains(Elt a) const;
    int size() const { return static_cast<int>(elems.size()); }
};

struct GroupFacts {
    bool abelian = false;
    std::vector<Elt> center;
    int exponent = 1;
    bool nilpotent = false;
    bool solvable = false;
};

struct Quotient {
    FiniteGroup group;       // cosets, indexed so that the coset of 0 is 0
    std::vector<Elt> proj;   // proj[g] = index of the coset containing g
};

// Holomorph Hol(G) = G x Aut(G) with (a,f)(b,g) = (a f(b), f o g).  The pair
// (a, auts[i]) is the holomorph element i * n + a, so the translation copy of
// G occupies indices 0..n-1 and the identity (0, id) is element 0.
struct HolomorphData {
    FiniteGroup hol;
    int base_order = 0;
    std::vector<GroupMorphism> auts;       // lexicographically sorted, auts[0] = id
    std::vector<Elt> embed_translations;   // a -> holomorph index of (a, id)

    Elt translation_of(Elt h) const { return static_cast<Elt>(h % base_order); }
    int aut_index_of(Elt h) const { return h / base_order; }
    Elt pair_of(Elt a, int aut_index) const {
        return static_cast<Elt>(aut_index * base_order + a);
    }
};

// Validation failures raised by group_from_table, each carrying a witness in
// the coordinates of the input table (before the identity is moved to 0).
struct MalformedTable : ValidationError {
    explicit MalformedTable(const std::string& msg) : ValidationError(msg) {}
};

struct NoIdentity : ValidationError {
    NoIdentity() : ValidationError("table has no two sided identity") {}
};

struct NoInverse : ValidationError {
    Elt a;
    explicit NoInverse(Elt a_)
        : ValidationError("element " + std::to_string(a_) + " has no two sided inverse"),
          a(a_) {}
};

struct NotAssociative : ValidationError {
    Elt a, b, c;
    NotAssociative(Elt a_, Elt b_, Elt c_)
        : ValidationError("(a b) c != a (b c) at a=" + std::to_string(a_) +
                          " b=" + std::to_string(b_) + " c=" + std::to_string(c_)),
          a(a_), b(b_), c(c_) {}
};

struct NotNormal : ValidationError {
    Elt g, h;  // g h g^-1 lands outside the subgroup
    NotNormal(Elt g_, Elt h_)
        : ValidationError("subgroup is not normal: conjugating " + std::to_string(h_) +
                          " by " + std::to_string(g_) + " leaves the subgroup"),
          g(g_), h(h_) {}
};

// Builds a validated group from a flat n x n table.  Checks identity,
// inverses and associativity (Light's test over a greedy generating set) and
// relabels so the identity sits at index 0.
FiniteGroup group_from_table(int n, std::vector<Elt> table,
                             std::vector<std::string> labels = {});

bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const GroupMorphism& m);

// All automorphisms, sorted lexicographically by image array.  The identity
// map always sorts first.
std::vector<GroupMorphism> automorphism_group(const FiniteGroup& g);

// f o g, meaning apply g first: (f o g)(x) = f(g(x)).
GroupMorphism compose(const GroupMorphism& f, const GroupMorphism& g);
GroupMorphism inverse(const GroupMorphism& f);

// Materialises Hol(G) as an explicit group.  Refuses orders above max_order
// since the table is quadratic in the result size.
HolomorphData holomorph(const FiniteGroup& g, int max_order = 4096);

GroupFacts structure_queries(const FiniteGroup& g);

// G/N for a normal subgroup N; throws NotNormal with a witness otherwise.
Quotient quotient(const FiniteGroup& g, const Subgroup& n);

// The subgroup as a group in its own right, elements renumbered by their
// position in s.elems; labels carry over when the parent has them.
FiniteGroup subgroup_group(const FiniteGroup& g, const Subgroup& s);

// First isomorphism found, or nullopt.  Cheap invariants (order profile,
// centre size, exponent, abelianness) are compared before any search.
std::optional<GroupMorphism> are_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// Visits every isomorphism g -> h.  The visitor returns false to stop early.
void enumerate_isomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                            const std::function<bool(const GroupMorphism&)>& visit);

Subgroup closure(const FiniteGroup& g, const std::vector<Elt>& gens);

bool is_subgroup(const FiniteGroup& g, const Subgroup& s);
bool is_normal(const FiniteGroup& g, const Subgroup& s);

// Every subgroup, sorted by size then element list.  Exhaustive lattice walk,
// intended for the small orders this project works at.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);

// Greedy generating sequence: repeatedly adjoin the smallest element outside
// the closure so far.  Deterministic, used as the backtracking base for
// isomorphism search.
std::vector<Elt> generating_sequence(const FiniteGroup& g);

// Sorted multiset of element orders; a cheap isomorphism invariant.
std::vector<int> element_order_profile(const FiniteGroup& g);

}  // namespace braceforge

#endif
