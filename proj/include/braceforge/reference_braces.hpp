#pragma once

#include "braceforge/brace.hpp"

namespace braceforge {

// Hand-built braces with known behaviour, used as fixed points across the
// test suites and reachable from the command line tool.

// Order 6: additive group S3, circle group cyclic. The lambda maps send
// every transposition to conjugation by one fixed transposition and the
// rest to the identity; the other two transpositions then have circle
// order 6.
SkewBrace symmetric3_cyclic6_brace();

// Order 8: additive group the dihedral group on {1, r, r2, r3, s, rs, r2s,
// r3s}, circle table transported from the quaternion units through an
// explicit bijection. Two-sided but not classical.
SkewBrace dihedral8_quaternion_brace();

// Order 12: additive group A4, circle table transported from a twelve point
// permutation copy of C3:C4. The smallest brace that is not two-sided.
SkewBrace alternating4_brace();

}  // namespace braceforge
