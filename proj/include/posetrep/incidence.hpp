#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetrep/int_matrix.hpp"
#include "posetrep/poset.hpp"

namespace posetrep {

// Incidence (zeta) matrix of the poset: entry (s, t) is 1 iff s <= t, rows
// and columns in level order. Lower-unitriangular in that order.
IntMatrix incidence_matrix(const Poset& p);

// Restriction of the incidence matrix to rows X and columns Y, each sorted
// into level order regardless of the order given.
IntMatrix incidence_restriction(const Poset& p, const std::vector<std::string>& x,
                                const std::vector<std::string>& y);

// The factorization C = F_{h-1} * ... * F_1. Returns the pairs (F_i, F_i^-1)
// for i = 1 .. h-1 (empty when h <= 1). F_i is the identity except for the
// row block of level i, which carries the incidence strips against all
// higher levels; F_i^-1 is identical with the strips negated.
std::vector<std::pair<IntMatrix, IntMatrix>> frobenius_factors(const Poset& p);

// Exact inverse of the incidence matrix, computed as F_1^-1 * ... *
// F_{h-1}^-1 and verified against the identity.
IntMatrix incidence_inverse(const Poset& p);

// The Mobius function matrix [mu(s, t)] in level order, computed by the
// classical recursion mu(s, s) = 1, mu(s, t) = -sum over s <= r < t of
// mu(s, r). Serves as an independent route to incidence_inverse.
IntMatrix mobius_matrix(const Poset& p);

}  // namespace posetrep
