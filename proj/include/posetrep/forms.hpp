#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "posetrep/int_matrix.hpp"
#include "posetrep/poset.hpp"

namespace posetrep {

// Dimension vector (alpha0; alpha_s) for the one-point enlargement: alpha0
// is the ambient dimension, alpha holds one entry per poset element.
// Entries may be negative; the quadratic forms are defined on all of Z^n.
struct DimVector {
  Int alpha0 = 0;
  std::map<std::string, Int> alpha;

  bool operator==(const DimVector&) const = default;
};

// Coordinate vector c = alpha_P * C_P^-1; c_s may be negative.
using CoordVector = std::map<std::string, Int>;

// The vectors alpha^(1), ..., alpha^(max(h,1)) in level order, where
// alpha^(1) = alpha_P and alpha^(k) = alpha^(k-1) * F_{k-1}^-1. The final
// vector equals the coordinate vector.
struct IterationTrace {
  std::vector<std::string> order;
  std::vector<std::vector<Int>> iterates;
};

// Cone-membership verdict; violations[0] is the certificate when not
// admissible, e.g. "c[3] = -1 < 0" or "alpha[7] = 9 > alpha0 = 8".
struct Admissibility {
  bool admissible = true;
  std::vector<std::string> violations;
};

// Summand-scan verdict: pass means Q >= 1 for alpha and every summand;
// otherwise witness holds a vector with witness_q = Q(witness) <= 0.
struct ScanReport {
  bool pass = true;
  std::optional<DimVector> witness;
  Int witness_q = 0;
};

constexpr Int kDefaultSummandBudget = 10'000'000;

// alpha_P as a row vector in level order. Throws if alpha does not carry
// exactly one value per element of p.
std::vector<Int> dim_row(const Poset& p, const DimVector& a);

// Solves sum over t <= s of c_t = alpha_s via C_P^-1; result verified
// against that defining system directly.
CoordVector coordinate_vector(const Poset& p, const DimVector& a);

IterationTrace iteration_sequence(const Poset& p, const DimVector& a);

// Admissible means c_s >= 0 for all s and alpha0 >= alpha_s for all s.
Admissibility is_admissible(const Poset& p, const DimVector& a);

// True iff alpha * C_{P^0}^-1 is non-negative: c_s >= 0 for all s and
// alpha0 - sum of c >= 0.
bool is_p0_nonnegative(const Poset& p, const DimVector& a);

// Euler form Q_P(alpha) = alpha * C_{P^0}^-1 * alpha^tr, evaluated both by
// the matrix product and by the expansion
// alpha0^2 - (sum c)*alpha0 + sum of c_s*alpha_s; the two must agree.
Int euler_form(const Poset& p, const DimVector& a);

// Tits matrix of the enlargement: block form [[1, 0], [-E_P, C_P^tr]],
// rows and columns ordered "0" first, then level order.
IntMatrix tits_matrix(const Poset& p);

// Tits form Q^(beta) = beta * tits_matrix * beta^tr with beta = (beta0;
// beta_P). Satisfies tits_form(alpha0; alpha*C^-1) = euler_form(alpha).
Int tits_form(const Poset& p, const DimVector& beta);

// All non-zero alpha' in the admissible cone with alpha - alpha' also in
// the cone, enumerated over 0 <= alpha' <= alpha componentwise. Sorted by
// (alpha0', alpha' in label order). Requires alpha admissible.
std::vector<DimVector> summands(const Poset& p, const DimVector& a,
                                Int budget = kDefaultSummandBudget);

// Checks Q >= 1 for alpha and all of its summands; a witness with Q <= 0
// certifies that alpha is not of finite type.
ScanReport summand_scan(const Poset& p, const DimVector& a,
                        Int budget = kDefaultSummandBudget);

}  // namespace posetrep
