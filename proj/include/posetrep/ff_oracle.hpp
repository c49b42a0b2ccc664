#pragma once

#include <string>
#include <utility>
#include <vector>

#include "posetrep/forms.hpp"
#include "posetrep/poset.hpp"

namespace posetrep {

// Primes accepted for finite-field counting. Interpolation only ever needs
// a handful of distinct field sizes, so extension fields are not supported.
bool is_prime_supported(Int p);

// Number of k-dimensional subspaces of F_q^n, exact. Zero when k is outside
// [0, n]; n must be non-negative.
Int gaussian_binomial(Int n, Int k, Int q);

// A subspace of F_p^ambient held as its unique reduced-row-echelon basis,
// so equal subspaces compare equal as values.
struct SubspaceBasis {
  int ambient = 0;
  int dim = 0;
  std::vector<std::vector<int>> rows;

  bool operator==(const SubspaceBasis&) const = default;
};

// Canonical basis of the row space of the given spanning rows.
SubspaceBasis rref_basis(int ambient, std::vector<std::vector<int>> rows, Int p);

constexpr Int kDefaultEnumBudget = 1'000'000;
constexpr Int kDefaultCountBudget = 10'000'000;

// All k-dimensional subspaces of F_p^n, each exactly once, by pivot-pattern
// enumeration. BudgetExceeded when the list would be longer than budget.
std::vector<SubspaceBasis> enumerate_subspaces(int n, int k, Int p,
                                               Int budget = kDefaultEnumBudget);

// Exact number of F_p-points of the representation variety: tuples of
// subspaces V_s of F_p^alpha0 with dim V_s = alpha_s and V_s inside V_t
// whenever s < t. Elements are processed top level first, each constrained
// to the intersection of its already-chosen upper covers; elements with an
// empty down-set contribute a closed-form Grassmannian factor instead of a
// branch. A dimension vector that cannot be realized yields 0, not an
// error. The budget caps the number of bases materialized.
Int count_points(const Poset& p, const DimVector& a, Int q,
                 Int budget = kDefaultCountBudget);

// Same count along a caller-chosen processing order, which must list every
// element exactly once, uppers before lowers. Exists so tests can confirm
// the count does not depend on the order.
Int count_points(const Poset& p, const DimVector& a, Int q,
                 const std::vector<std::string>& order, Int budget = kDefaultCountBudget);

// Largest value of dim(sum of V_y over top-level y) over all F_p-points.
// The search runs inside an ambient of dimension min(alpha0, sum of
// top-level alpha_y) with the first top-level subspace pinned to a
// coordinate subspace; both reductions preserve the maximum because the
// variety, the objective, and point existence are GL-invariant.
// EmptyVariety when there are no points at all.
Int max_sum_dim_empirical(const Poset& p, const DimVector& a, Int q,
                          Int budget = kDefaultCountBudget);

struct FitReport {
  std::string verdict;  // "CONSISTENT" or "INCONSISTENT"
  Int claimed_dim = 0;
  int fitted_degree = 0;
  std::vector<std::pair<Int, Int>> counts;              // (prime, exact count)
  std::vector<std::string> poly;                        // coefficients low -> high, exact
  std::vector<std::pair<Int, std::string>> residuals;   // validation prime -> count - fit
  std::string note;
};

// Counts points at every listed prime, interpolates the unique polynomial
// of degree <= claimed_dim through the first claimed_dim + 1 of them, and
// checks that its degree is exactly claimed_dim and that it reproduces the
// remaining counts. A CONSISTENT verdict therefore needs at least one
// prime beyond the claimed_dim + 1 used for interpolation; a degree
// mismatch is INCONSISTENT with however many primes were given.
FitReport fit_dimension(const Poset& p, const DimVector& a, const std::vector<Int>& primes,
                        Int claimed_dim, Int budget = kDefaultCountBudget);

}  // namespace posetrep
