#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braceforge/brace.hpp"

namespace braceforge {

// A set-theoretical solution candidate on the points {0, ..., n-1}: the map
// r(x, y) = (sigma_x(y), tau_y(x)). Both families are stored subscript
// first, so sigma[x*n + y] = sigma_x(y) and tau[y*n + x] = tau_y(x).
struct Solution {
    int n = 0;
    std::vector<Elt> sigma;
    std::vector<Elt> tau;

    std::pair<Elt, Elt> r(Elt x, Elt y) const {
        return {sigma[static_cast<std::size_t>(x) * n + y],
                tau[static_cast<std::size_t>(y) * n + x]};
    }
};

struct DegenerateMap : ValidationError {
    std::string family;  // "sigma" or "tau"
    Elt at;
    DegenerateMap(std::string family_, Elt at_)
        : ValidationError(family_ + " of element " + std::to_string(at_) +
                          " is not a permutation"),
          family(std::move(family_)),
          at(at_) {}
};

struct BraidFailure : ValidationError {
    Elt x, y, z;
    BraidFailure(Elt x_, Elt y_, Elt z_)
        : ValidationError("braid relation fails at (x, y, z) = (" + std::to_string(x_) +
                          ", " + std::to_string(y_) + ", " + std::to_string(z_) + ")"),
          x(x_),
          y(y_),
          z(z_) {}
};

// Checks that every sigma_x and tau_y is a permutation, that r is a
// bijection on pairs, and that (r x id)(id x r)(r x id) agrees with
// (id x r)(r x id)(id x r) on all triples.
void verify_solution(const Solution& s);

// r applied twice is the identity on pairs.
bool is_involutive(const Solution& s);

// The canonical solution of a brace: sigma_x = lambda_x and tau_y = mu_y.
// Construction re-checks that r(x, y) = (u, v) keeps the circle product,
// x o y = u o v, and that both published forms of mu agree.
Solution solution_from_brace(const SkewBrace& b);

// Order of r as a permutation of the n^2 pairs.
long long solution_order(const Solution& s);

// Exponent of the additive group modulo its center. For braces with more
// than one element the canonical solution has order exactly twice this.
int brace_depth(const SkewBrace& b);

// A bijection t with r(t(x), x) = (t(x), x) for every x, if one exists;
// solutions carrying one are called biquandles. Brace solutions always do,
// via t(a) = the mu_a-preimage of a.
std::optional<std::vector<Elt>> biquandle_map(const Solution& s);
bool is_biquandle(const Solution& s);

// Restriction to a subset that is closed under every sigma_x and tau_y with
// x, y in the subset; points are renumbered by their position.
Solution restrict_solution(const Solution& s, const std::vector<Elt>& subset);

// The inverse of r as a map on pairs, rearranged back into sigma/tau
// families. For a brace solution this is the solution one gets from the
// opposite additive operation. Throws if r is not a bijection on pairs.
Solution inverse_solution(const Solution& s);

// A point bijection p with (p x p) r = r' (p x p), found by backtracking
// with forced-image propagation through both families.
std::optional<std::vector<Elt>> solution_isomorphism(const Solution& s, const Solution& t);

}  // namespace braceforge
