#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "braceforge/brace.hpp"
#include "braceforge/constructions.hpp"
#include "braceforge/finite_group.hpp"

namespace braceforge {

// Braces built from ring data: the circle operation a o b = a + b + ab on a
// nil ring, exact factorizations through a subring and a left ideal,
// construction subgroups of near-rings, and two brace structures on the set
// of polynomial functions over a finite algebra with a nilpotent part.

// Addition and multiplication tables for the fields of size up to 8. The
// carrier is 0..q-1 with 0 and 1 the two identities; for sizes 4 and 8 an
// element is a bit vector of coefficients over F2 and addition is xor.
struct GaloisField {
    int q = 0;
    std::vector<Elt> add;  // q x q
    std::vector<Elt> mul;  // q x q

    Elt sum(Elt a, Elt b) const { return add[static_cast<std::size_t>(a) * q + b]; }
    Elt prod(Elt a, Elt b) const { return mul[static_cast<std::size_t>(a) * q + b]; }
};

// Supports q in {2, 3, 4, 5, 7, 8}; anything else is rejected.
GaloisField galois_field(int q);

// A finite ring, or a near-ring when the flag says so. Addition is a group
// that need not be abelian in near-ring mode, multiplication a flat table.
// Rings distribute on both sides; near-rings only guarantee
// x (y + z) = x y + x z, the left law. When unital, one holds the index of
// the two sided multiplicative identity.
struct FiniteRing {
    FiniteGroup add;
    std::vector<Elt> mult;  // mult[a * n + b] = a b
    bool unital = false;
    bool near_ring = false;
    Elt one = kNoElt;

    int size() const { return add.n; }
    Elt sum(Elt a, Elt b) const { return add.op(a, b); }
    Elt mul(Elt a, Elt b) const {
        return mult[static_cast<std::size_t>(a) * add.n + b];
    }
    // a + b + a b, defined whenever the tables are; forming a group out of
    // it is what circle_group checks.
    Elt circle(Elt a, Elt b) const { return add.op(add.op(a, b), mul(a, b)); }
};

// Validates associativity of mult, the distributive laws the mode promises
// (both for rings, left only for near-rings), that ring mode has an abelian
// addition, and locates the identity when unital is requested.
FiniteRing make_finite_ring(FiniteGroup add, std::vector<Elt> mult, bool unital,
                            bool near_ring);

struct NotCircleInvertible : ValidationError {
    Elt a;
    explicit NotCircleInvertible(Elt a_)
        : ValidationError("element " + std::to_string(a_) +
                          " is not nilpotent, so it has no circle inverse"),
          a(a_) {}
};

// The group (S, o) with a o b = a + b + a b on a subset closed under both
// ring operations, every element of which is nilpotent; element i of the
// result is s.elems[i]. The nilpotency scan throws NotCircleInvertible at
// the first element whose powers never reach 0. Requires a two sided
// distributive ring, since the circle operation is only associative with
// both laws available.
FiniteGroup circle_group(const FiniteRing& r, const Subgroup& s);

// Same on the whole carrier, which therefore has to be a nil ring.
FiniteGroup circle_group(const FiniteRing& r);

// Exact factorization of (R, o) through a subring s and a left ideal i that
// meet only in 0 and add up to all of R. Hypotheses are checked in order:
// s is an additive subgroup, closed under multiplication, and nil; i is an
// additive subgroup, absorbs multiplication from the left by the whole
// carrier, and is nil; the two meet trivially; sums s + i cover the carrier.
// The result feeds brace_from_exact_factorization.
ExactFactorization ring_exact_factorization(const FiniteRing& r, const Subgroup& s,
                                            const Subgroup& i);

struct NotConstructionSubgroup : ValidationError {
    Elt m, m2;
    NotConstructionSubgroup(Elt m_, Elt m2_)
        : ValidationError("1 + M is not a group of units: witness pair (m, m') = (" +
                          std::to_string(m_) + ", " + std::to_string(m2_) + ")"),
          m(m_),
          m2(m2_) {}
};

// The brace on an additive subgroup M of a unital near-ring with
//
//     m . m'  =  m + m',        m o m'  =  m + (1 + m) m'.
//
// M qualifies when 1 + M is a subgroup of the units: the product
// (1 + m)(1 + m') must land back in 1 + M and every 1 + m must have a two
// sided inverse there. NotConstructionSubgroup reports the failing pair, or
// (m, m) for a missing inverse. Element i of the result is m.elems[i].
SkewBrace construction_subgroup_brace(const FiniteRing& r, const Subgroup& m);

// The near-ring of all maps g -> g under pointwise addition and
// (f . g)(x) = g(f(x)), composition written left to right. The carrier is
// every value table in lexicographic order, so the zero map sits at index 0.
// Refuses |g|^|g| above the table budget.
FiniteRing map_near_ring(const FiniteGroup& g, int max_maps = 4096);

// A finite algebra A = F + N over the field with q elements, where N is a
// nilpotent algebra spanned by e_0 .. e_{dim-1}. The carrier packs an
// element c + sum n_i e_i into base q digits with the field coordinate c
// most significant, so N occupies the indices below q^dim and the algebra
// identity 1 sits at index q^dim.
struct NilpotentAlgebra {
    int q = 0;
    int dim = 0;
    int nu = 0;  // smallest power with N^nu = 0
    bool commutative = false;
    FiniteRing ring;            // the ambient unital algebra
    std::vector<Elt> n_elems;   // carrier indices of N, which are 0 .. q^dim - 1

    int carrier() const { return ring.size(); }
};

// Builds the algebra from structure constants: each triple (i, j, k) adds 1
// to the e_k coefficient of e_i e_j, repeats accumulating in the field.
// Multiplication extends bilinearly with the field coordinate central. The
// triples must produce an associative product, N must actually be nilpotent
// and the carrier q^(dim+1) must fit the table budget.
NilpotentAlgebra make_nilpotent_algebra(int q, int dim,
                                        const std::vector<std::array<int, 3>>& triples);

// Text format for algebra files: '#' starts a comment line, the first data
// line holds "q dim", every following line one structure triple "i j k".
NilpotentAlgebra read_algebra(std::istream& in, const std::string& source);
NilpotentAlgebra read_algebra_file(const std::string& path);

// The functions A -> A with values in N that polynomials with coefficients
// in N can realize, recorded as deduplicated value tables in lexicographic
// order, so fns[0] is the zero function. Generated from the constant
// functions and the scaled power maps v -> n v^k, k up to degree_bound, by
// closing under pointwise sum, pointwise product, multiplication by the
// identity function on either side, and the two substitutions
// g(v + f(v)) and g(v o f(v)); each of those sends polynomial functions to
// polynomial functions, and together they cover every operation the two
// brace products below perform.
struct PolyFunctionSet {
    NilpotentAlgebra alg;
    std::vector<std::vector<Elt>> fns;
    int degree_bound = 0;

    int size() const { return static_cast<int>(fns.size()); }
};

// Runs the closure; degree_bound is nu * dim, enough for the scaled power
// generators since higher powers of any element repeat earlier values.
// Throws ResourceError past 4096 functions.
PolyFunctionSet poly_functions(const NilpotentAlgebra& alg);

// The classical brace on the function set with pointwise addition and
//
//     f . g  =  v -> f(v) + g(v),      f o g  =  v -> f(v) + g(v + f(v)).
//
// Element i is s.fns[i]. Requires a commutative algebra; the abelianness of
// the additive side is asserted on the way out.
SkewBrace poly_brace_additive(const PolyFunctionSet& s);

// The skew brace on the same set whose addition is the pointwise circle
// operation of the algebra and whose circle product is
//
//     f o g  =  v -> f(v) o g(v o f(v)).
//
// Works over noncommutative algebras as well.
SkewBrace poly_brace_circle(const PolyFunctionSet& s);

}  // namespace braceforge
