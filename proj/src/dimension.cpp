#include "posetrep/dimension.hpp"

#include <algorithm>

#include "posetrep/incidence.hpp"

namespace posetrep {

namespace {

DimVector restrict_to(const Poset& sub, const DimVector& a) {
  DimVector r;
  r.alpha0 = a.alpha0;
  for (const auto& label : sub.labels()) r.alpha[label] = a.alpha.at(label);
  return r;
}

// Sum of the coordinate vector, with no hypothesis check: the raw value of
// alpha_P * C_P^-1 * E_P used by the peeling identity.
Int coordinate_sum(const Poset& p, const DimVector& a) {
  Int total = 0;
  for (const auto& [label, cs] : coordinate_vector(p, a)) total = checked_add(total, cs);
  return total;
}

std::string pick_maximal(const Poset& p, MaxElementChoice choice) {
  auto maxima = p.maximal_elements();  // in level order = top level
  switch (choice) {
    case MaxElementChoice::level_order_first:
      return maxima.front();
    case MaxElementChoice::level_order_last:
      return maxima.back();
    case MaxElementChoice::label_min:
      return *std::min_element(maxima.begin(), maxima.end());
  }
  throw InternalInconsistencyError("unknown tie-break policy");
}

}  // namespace

Int grassmann_dim(Int k, Int n) {
  if (k < 0 || n < 0 || k > n) {
    throw InvalidDimensionsError("Gr(" + std::to_string(k) + ", " + std::to_string(n) +
                                 ") requires 0 <= k <= n");
  }
  return checked_mul(k, checked_sub(n, k));
}

Int generic_sum_dim(const Poset& p, const DimVector& a) {
  if (!is_p0_nonnegative(p, a)) {
    throw HypothesisViolatedError("alpha * C_{P^0}^-1 has a negative coordinate");
  }
  return coordinate_sum(p, a);
}

DimReport variety_dim(const Poset& p, const DimVector& a) {
  auto adm = is_admissible(p, a);
  if (!adm.admissible) throw NotAdmissibleError(adm.violations.front());
  DimReport report;
  report.method = "closed";
  report.q_value = euler_form(p, a);
  report.gl_dim = checked_mul(a.alpha0, a.alpha0);
  report.dim_variety = checked_sub(report.gl_dim, report.q_value);
  return report;
}

DimReport variety_dim_recursive(const Poset& p, const DimVector& a, MaxElementChoice choice) {
  auto adm = is_admissible(p, a);
  if (!adm.admissible) throw NotAdmissibleError(adm.violations.front());
  DimReport report;
  report.method = "recursive";
  report.q_value = euler_form(p, a);
  report.gl_dim = checked_mul(a.alpha0, a.alpha0);

  Poset current = p;
  DimVector dims = a;
  Int total = 0;
  while (current.size() > 0) {
    RecursionStep step;
    step.x = pick_maximal(current, choice);
    auto dx = current.down_set(step.x);
    if (!dx.empty()) {
      Poset sub = induced_subposet(current, dx);
      step.sum_dim = coordinate_sum(sub, restrict_to(sub, dims));
    }
    step.fiber_k = checked_sub(dims.alpha.at(step.x), step.sum_dim);
    step.fiber_n = checked_sub(dims.alpha0, step.sum_dim);
    if (step.fiber_k < 0 || step.fiber_n < 0 || step.fiber_k > step.fiber_n) {
      throw InternalInconsistencyError("peeling produced an invalid fiber Gr(" +
                                       std::to_string(step.fiber_k) + ", " +
                                       std::to_string(step.fiber_n) + ")");
    }
    step.fiber_dim = grassmann_dim(step.fiber_k, step.fiber_n);
    total = checked_add(total, step.fiber_dim);
    report.trace.push_back(step);

    dims.alpha.erase(step.x);
    current = remove_element(current, step.x);
  }
  report.dim_variety = total;
  return report;
}

Int lemma2_defect(const Poset& p, const std::string& x, const DimVector& a) {
  if (!p.contains(x)) throw UnknownLabelError("no element '" + x + "'");
  auto maxima = p.maximal_elements();
  if (std::find(maxima.begin(), maxima.end(), x) == maxima.end()) {
    throw NotMaximalError("'" + x + "' is not maximal");
  }
  Int q_full = euler_form(p, a);
  Poset rest = remove_element(p, x);
  DimVector a_rest = a;
  a_rest.alpha.erase(x);
  Int q_rest = euler_form(rest, a_rest);

  auto dx = p.down_set(x);
  Int sum_dim = 0;
  if (!dx.empty()) {
    Poset sub = induced_subposet(p, dx);
    sum_dim = coordinate_sum(sub, restrict_to(sub, a));
  }
  Int alpha_x = a.alpha.at(x);
  Int rhs = checked_neg(checked_mul(checked_sub(alpha_x, sum_dim),
                                    checked_sub(a.alpha0, alpha_x)));
  return checked_sub(checked_sub(q_full, q_rest), rhs);
}

}  // namespace posetrep
