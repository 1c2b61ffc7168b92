#pragma once

#include <string>
#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

struct OrderBoundExceeded : ResourceError {
    int n;
    OrderBoundExceeded(int n_, int bound)
        : ResourceError("regular subgroup search at order " + std::to_string(n_) +
                        " exceeds the configured bound " + std::to_string(bound)),
          n(n_) {}
};

struct CatalogueMissing : ResourceError {
    int n;
    explicit CatalogueMissing(int n_)
        : ResourceError("no complete group catalogue is shipped for order " +
                        std::to_string(n_)),
          n(n_) {}
};

// The regular subgroups of the holomorph of a fixed group, one per family
// of automorphisms {f_a}: a subgroup with bijective translation projection
// contains exactly one pair (a, f_a) per group element, with f_0 = id and
// the closure law f_{a f_a(b)} = f_a f_b. The holomorph itself is never
// materialised; its order can exceed the element type's range.
//
// Families are stored flat, n automorphism indices each, sorted
// lexicographically, so the output order does not depend on the search
// schedule.
struct RegularSubgroupSearch {
    FiniteGroup base;
    std::vector<GroupMorphism> auts;  // automorphism_group(base)
    int count = 0;
    std::vector<Elt> families;

    std::vector<int> orbit_of;  // filled by classify_orbits
    int orbit_count = 0;

    const Elt* family(int k) const {
        return families.data() + static_cast<std::size_t>(k) * base.n;
    }
};

// Depth-first search assigning an automorphism to each translation part in
// turn and propagating the closure law; contradictions prune the branch.
// Candidate automorphisms for the first unassigned element may be split
// across jobs worker threads, with the results re-sorted. Throws
// OrderBoundExceeded above the configured order bound.
RegularSubgroupSearch regular_subgroups(const FiniteGroup& a, int max_order = 24,
                                        int jobs = 1);

// Partitions the families into orbits under conjugation by the automorphism
// group of the base: an automorphism g sends {f_a} to {g f_{g^-1(a)} g^-1}.
// Two subgroups land in the same orbit exactly when their braces are
// isomorphic. Fills orbit_of with labels in first-seen order and returns the
// number of orbits.
int classify_orbits(RegularSubgroupSearch& s);

// The skew brace induced by family k: addition is the base group and
// a o b = a f_a(b). Runs the full brace verification.
SkewBrace brace_of(const RegularSubgroupSearch& s, int k);

// One fully materialised search result. iso_type is the position of the
// circle group's isomorphism class in the order-n catalogue, or -1 when the
// order has no catalogue; orbit_id is -1 until classify_orbits has run.
struct RegularSubgroupRecord {
    std::vector<Elt> f;
    SkewBrace brace;
    int iso_type = -1;
    int orbit_id = -1;
};

RegularSubgroupRecord record_of(const RegularSubgroupSearch& s, int k);

// Hopf-Galois structure and skew brace counts for one order. Rows list the
// circle (Galois) group G, columns the additive (type) group A, in the fixed
// catalogue order:
//
//     f_matrix[i][j]  regular subgroups of the holomorph of A_j
//                     with circle group isomorphic to G_i
//     e_matrix[i][j]  Hopf-Galois structures of type A_j on a G_i extension,
//                     |Aut(G_i)| / |Aut(A_j)| * f_matrix[i][j]
//     classes[i][j]   isomorphism classes of skew braces, the automorphism
//                     orbit count
//
// and h is the sum of the e matrix.
struct CensusTable {
    int n = 0;
    std::vector<std::string> names;
    std::vector<long> aut_orders;
    std::vector<std::vector<long>> e_matrix;
    std::vector<std::vector<long>> f_matrix;
    std::vector<std::vector<long>> classes;
    long h = 0;
};

// Runs the regular subgroup search over every group of order n. Throws
// CatalogueMissing beyond the shipped catalogue and checks that the scaling
// from f to e divides exactly in every cell.
CensusTable census(int n, int max_order = 24, int jobs = 1);

// Both sides of the uniqueness criterion: there is exactly one skew brace
// of size n if and only if n is coprime to phi(n).
struct UniquenessReport {
    int n = 0;
    long brace_classes = 0;
    bool unique = false;
    bool coprime = false;
};

UniquenessReport uniqueness_check(int n, int max_order = 24, int jobs = 1);

// The cyclic group of odd prime power order p^k: p^(k-1) regular subgroups
// falling into k orbits. Classes are reported with their socle and orbit
// sizes, sorted by descending socle size; the expected pattern is socles
// p^k, p^(k-1), ..., p against orbit sizes 1, p-1, p(p-1), ...,
// p^(k-2)(p-1).
struct CyclicPrimePowerReport {
    int p = 0;
    int k = 0;
    long subgroup_count = 0;
    int class_count = 0;
    std::vector<long> socle_sizes;
    std::vector<long> orbit_sizes;
};

CyclicPrimePowerReport cyclic_prime_power_report(int p, int k, int max_order = 24);

}  // namespace braceforge
