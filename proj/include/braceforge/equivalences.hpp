#pragma once

#include <string>
#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

// A skew cycle set: a group carrying a second operation bullet(a, b) whose
// translations phi_a = bullet(a, -) are bijections satisfying
//
//     bullet(a, b c) = bullet(a, b) bullet(a, c)
//     bullet(a b, c) = bullet(bullet(a, b), bullet(a, c))
//
// where juxtaposition is the group product. The star table inverts each
// translation: star[a][bullet(a, b)] = b. Skew cycle sets over a fixed group
// classify the skew braces with that additive group, via bullet = the
// inverse lambda maps of the brace.
struct SkewCycleSet {
    FiniteGroup group;
    std::vector<Elt> bullet;
    std::vector<Elt> star;

    int size() const { return group.n; }
    Elt bul(Elt a, Elt b) const { return bullet[static_cast<std::size_t>(a) * group.n + b]; }
    Elt unbul(Elt a, Elt b) const { return star[static_cast<std::size_t>(a) * group.n + b]; }
};

struct CycleSetAxiomFailure : ValidationError {
    std::string tag;
    Elt a, b, c;
    CycleSetAxiomFailure(std::string tag_, Elt a_, Elt b_, Elt c_)
        : ValidationError("skew cycle set law " + tag_ + " fails at (a, b, c) = (" +
                          std::to_string(a_) + ", " + std::to_string(b_) + ", " +
                          std::to_string(c_) + ")"),
          tag(std::move(tag_)),
          a(a_),
          b(b_),
          c(c_) {}
};

// Checks both defining laws and the bijectivity of every translation, then
// fills in the star table. Throws CycleSetAxiomFailure with the law spelled
// out in the tag; for the bijectivity tag, b and c are the two preimages
// that collide.
SkewCycleSet make_skew_cycle_set(FiniteGroup group, std::vector<Elt> bullet);

// The cycle set of a skew brace: same carrier, same additive group, and
// a • b the inverse lambda map of a applied to b.
SkewCycleSet cycle_set_from_brace(const SkewBrace& x);

// The skew brace of a cycle set: addition is the cycle set group and
// a o b = a . (a * b), so that lambda_a recovers the star translation.
// Inverse to cycle_set_from_brace on the nose, in both directions.
SkewBrace brace_from_cycle_set(const SkewCycleSet& s);

// A matched pair of a group with itself whose two actions refine the group
// operation. The carrier group plays the circle role; the tables store
//
//     harpoon_r[a][b] = a -> b   (a left action of the group on itself)
//     harpoon_l[a][b] = a <- b   (a right action of the group on itself)
//
// subject to the two mixed distributive laws of a matched pair and to the
// splitting law a o b = (a -> b) o (a <- b). Such pairs classify the skew
// braces with the given multiplicative group.
struct BraceMatchedPair {
    FiniteGroup group;
    std::vector<Elt> harpoon_r;
    std::vector<Elt> harpoon_l;

    int size() const { return group.n; }
    Elt r(Elt a, Elt b) const { return harpoon_r[static_cast<std::size_t>(a) * group.n + b]; }
    Elt l(Elt a, Elt b) const { return harpoon_l[static_cast<std::size_t>(a) * group.n + b]; }
};

struct MatchedPairAxiomFailure : ValidationError {
    std::string tag;
    MatchedPairAxiomFailure(std::string tag_, Elt a, Elt b)
        : ValidationError("matched pair law " + tag_ + " fails at (a, b) = (" +
                          std::to_string(a) + ", " + std::to_string(b) + ")"),
          tag(std::move(tag_)) {}
};

// Checks the action axioms, the two matched pair laws and the splitting law.
BraceMatchedPair make_brace_matched_pair(FiniteGroup group, std::vector<Elt> harpoon_r,
                                         std::vector<Elt> harpoon_l);

// The matched pair of a skew brace: a -> b = lambda_a(b), a <- b = mu_b(a).
BraceMatchedPair matched_pair_from_brace(const SkewBrace& x);

// The skew brace of a matched pair: multiplication is the carrier group and
// a b = a o (bar a -> b). Inverse to matched_pair_from_brace on the nose.
SkewBrace brace_from_matched_pair(const BraceMatchedPair& m);

}  // namespace braceforge
