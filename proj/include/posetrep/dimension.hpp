#pragma once

#include <string>
#include <vector>

#include "posetrep/forms.hpp"
#include "posetrep/poset.hpp"

namespace posetrep {

// One peeling step of the recursion: maximal element x, generic dimension X
// of the sum over its down-set, and the fiber Grassmannian Gr(k, n) with
// k = alpha_x - X, n = alpha0 - X.
struct RecursionStep {
  std::string x;
  Int sum_dim = 0;
  Int fiber_k = 0;
  Int fiber_n = 0;
  Int fiber_dim = 0;
};

// Tie-break policy for picking a maximal element (all maximal elements sit
// in the top level, so these choose within that antichain).
enum class MaxElementChoice {
  level_order_first,
  level_order_last,
  label_min,
};

struct DimReport {
  Int dim_variety = 0;
  Int q_value = 0;
  Int gl_dim = 0;
  std::string method;  // "closed" or "recursive"
  std::vector<RecursionStep> trace;
};

// dim Gr(k, n) = k(n - k).
Int grassmann_dim(Int k, Int n);

// Generic dimension of the sum of all top-level subspaces: sum of the
// coordinate vector. Requires alpha * C_{P^0}^-1 non-negative.
Int generic_sum_dim(const Poset& p, const DimVector& a);

// Closed form: dim R = alpha0^2 - Q_P(alpha). Requires alpha admissible.
DimReport variety_dim(const Poset& p, const DimVector& a);

// Independent route: peel maximal elements one at a time, accumulating
// fiber Grassmannian dimensions. Requires alpha admissible.
DimReport variety_dim_recursive(const Poset& p, const DimVector& a,
                                MaxElementChoice choice = MaxElementChoice::level_order_first);

// Defect of the peeling identity for maximal x:
// [Q_P(alpha) - Q_{P minus x}(alpha)] + (alpha_x - X)(alpha0 - alpha_x)
// where X = alpha_{D_x} * C_{D_x}^-1 * E_{D_x}. Zero for every integer
// alpha, admissible or not.
Int lemma2_defect(const Poset& p, const std::string& x, const DimVector& a);

}  // namespace posetrep
