#include "posetrep/forms.hpp"

#include <algorithm>
#include <numeric>

#include "posetrep/incidence.hpp"

namespace posetrep {

namespace {

Int dot(const std::vector<Int>& u, const std::vector<Int>& v) {
  if (u.size() != v.size()) throw InternalInconsistencyError("dot length mismatch");
  Int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc = checked_add(acc, checked_mul(u[i], v[i]));
  return acc;
}

Int quadratic_value(const std::vector<Int>& v, const IntMatrix& m) {
  return dot(row_times_matrix(v, m), v);
}

Int sum_checked(const std::vector<Int>& v) {
  Int acc = 0;
  for (Int x : v) acc = checked_add(acc, x);
  return acc;
}

// (alpha0, alpha_P) as one row, "0" coordinate first.
std::vector<Int> enlarged_row(const Poset& p, const DimVector& a) {
  std::vector<Int> row;
  row.reserve(static_cast<std::size_t>(p.size()) + 1);
  row.push_back(a.alpha0);
  auto rest = dim_row(p, a);
  row.insert(row.end(), rest.begin(), rest.end());
  return row;
}

// C_{P^0}^-1 assembled from blocks: [[1, 0], [-C^-1 * E, C^-1]].
IntMatrix enlarged_incidence_inverse(const Poset& p) {
  const std::size_t n = static_cast<std::size_t>(p.size());
  IntMatrix cinv = incidence_inverse(p);
  IntMatrix m(n + 1, n + 1);
  m.at(0, 0) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int rowsum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      rowsum = checked_add(rowsum, cinv.at(i, j));
      m.at(i + 1, j + 1) = cinv.at(i, j);
    }
    m.at(i + 1, 0) = checked_neg(rowsum);
  }
  return m;
}

CoordVector coordinate_vector_of_row(const Poset& p, const std::vector<Int>& row) {
  auto crow = row_times_matrix(row, incidence_inverse(p));
  const auto& order = p.level_order();
  CoordVector c;
  for (std::size_t i = 0; i < crow.size(); ++i) c[p.labels()[order[i]]] = crow[i];
  // Verify against the defining system: sum over t <= s of c_t = alpha_s.
  for (std::size_t i = 0; i < order.size(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (p.leq(order[j], order[i])) acc = checked_add(acc, crow[j]);
    }
    if (acc != row[i]) throw InternalInconsistencyError("coordinate vector failed verification");
  }
  return c;
}

}  // namespace

std::vector<Int> dim_row(const Poset& p, const DimVector& a) {
  for (const auto& [label, value] : a.alpha) {
    if (!p.contains(label)) {
      throw UnknownLabelError("dimension vector names unknown element '" + label + "'");
    }
  }
  std::vector<Int> row;
  row.reserve(p.level_order().size());
  for (int idx : p.level_order()) {
    auto it = a.alpha.find(p.labels()[idx]);
    if (it == a.alpha.end()) {
      throw InvalidDimensionsError("dimension vector missing a value for element '" +
                                   p.labels()[idx] + "'");
    }
    row.push_back(it->second);
  }
  return row;
}

CoordVector coordinate_vector(const Poset& p, const DimVector& a) {
  return coordinate_vector_of_row(p, dim_row(p, a));
}

IterationTrace iteration_sequence(const Poset& p, const DimVector& a) {
  IterationTrace trace;
  for (int idx : p.level_order()) trace.order.push_back(p.labels()[idx]);
  auto v = dim_row(p, a);
  trace.iterates.push_back(v);
  for (const auto& [f, finv] : frobenius_factors(p)) {
    v = row_times_matrix(v, finv);
    trace.iterates.push_back(v);
  }
  return trace;
}

Admissibility is_admissible(const Poset& p, const DimVector& a) {
  CoordVector c = coordinate_vector(p, a);
  Admissibility result;
  for (const auto& label : p.labels()) {
    Int cs = c.at(label);
    if (cs < 0) {
      result.violations.push_back("c[" + label + "] = " + std::to_string(cs) + " < 0");
    }
  }
  for (const auto& label : p.labels()) {
    Int as = a.alpha.at(label);
    if (as > a.alpha0) {
      result.violations.push_back("alpha[" + label + "] = " + std::to_string(as) +
                                  " > alpha0 = " + std::to_string(a.alpha0));
    }
  }
  result.admissible = result.violations.empty();
  return result;
}

bool is_p0_nonnegative(const Poset& p, const DimVector& a) {
  CoordVector c = coordinate_vector(p, a);
  Int total = 0;
  for (const auto& [label, cs] : c) {
    if (cs < 0) return false;
    total = checked_add(total, cs);
  }
  return checked_sub(a.alpha0, total) >= 0;
}

Int euler_form(const Poset& p, const DimVector& a) {
  auto row = enlarged_row(p, a);
  Int by_matrix = quadratic_value(row, enlarged_incidence_inverse(p));
  // Expansion cross-check: alpha0^2 - (sum c)*alpha0 + sum of c_s*alpha_s.
  auto alpha_row = dim_row(p, a);
  auto crow = row_times_matrix(alpha_row, incidence_inverse(p));
  Int expanded = checked_sub(checked_mul(a.alpha0, a.alpha0),
                             checked_mul(sum_checked(crow), a.alpha0));
  expanded = checked_add(expanded, dot(crow, alpha_row));
  if (by_matrix != expanded) {
    throw InternalInconsistencyError("Euler form routes disagree");
  }
  return by_matrix;
}

IntMatrix tits_matrix(const Poset& p) {
  const std::size_t n = static_cast<std::size_t>(p.size());
  IntMatrix c = incidence_matrix(p);
  IntMatrix m(n + 1, n + 1);
  m.at(0, 0) = 1;
  for (std::size_t i = 0; i < n; ++i) {
    m.at(i + 1, 0) = -1;
    for (std::size_t j = 0; j < n; ++j) m.at(i + 1, j + 1) = c.at(j, i);
  }
  return m;
}

Int tits_form(const Poset& p, const DimVector& beta) {
  return quadratic_value(enlarged_row(p, beta), tits_matrix(p));
}

namespace {

bool in_cone(const Poset& p, const IntMatrix& cinv, Int alpha0, const std::vector<Int>& row) {
  for (Int v : row_times_matrix(row, cinv)) {
    if (v < 0) return false;
  }
  for (Int v : row) {
    if (v > alpha0) return false;
  }
  return true;
}

}  // namespace

std::vector<DimVector> summands(const Poset& p, const DimVector& a, Int budget) {
  auto adm = is_admissible(p, a);
  if (!adm.admissible) throw NotAdmissibleError(adm.violations.front());

  auto alpha_row = dim_row(p, a);
  Int space = checked_add(a.alpha0, 1);
  try {
    for (Int v : alpha_row) space = checked_mul(space, checked_add(v, 1));
  } catch (const OverflowError&) {
    throw SearchSpaceTooLargeError("summand search space exceeds representable size");
  }
  if (space > budget) {
    throw SearchSpaceTooLargeError("summand search space " + std::to_string(space) +
                                   " exceeds budget " + std::to_string(budget));
  }

  IntMatrix cinv = incidence_inverse(p);
  const auto& order = p.level_order();
  const std::size_t n = alpha_row.size();
  std::vector<DimVector> found;
  std::vector<Int> cand(n, 0);
  for (Int a0 = 0; a0 <= a.alpha0; ++a0) {
    std::fill(cand.begin(), cand.end(), 0);
    while (true) {
      bool nonzero = a0 > 0 || std::any_of(cand.begin(), cand.end(), [](Int v) { return v != 0; });
      if (nonzero && in_cone(p, cinv, a0, cand)) {
        std::vector<Int> rest(n);
        for (std::size_t i = 0; i < n; ++i) rest[i] = alpha_row[i] - cand[i];
        if (in_cone(p, cinv, a.alpha0 - a0, rest)) {
          DimVector s;
          s.alpha0 = a0;
          for (std::size_t i = 0; i < n; ++i) s.alpha[p.labels()[order[i]]] = cand[i];
          found.push_back(std::move(s));
        }
      }
      // Odometer over 0 <= cand <= alpha_row.
      std::size_t i = 0;
      while (i < n && cand[i] == alpha_row[i]) cand[i++] = 0;
      if (i == n) break;
      ++cand[i];
    }
  }
  std::sort(found.begin(), found.end(), [&](const DimVector& x, const DimVector& y) {
    if (x.alpha0 != y.alpha0) return x.alpha0 < y.alpha0;
    for (const auto& label : p.labels()) {
      if (x.alpha.at(label) != y.alpha.at(label)) return x.alpha.at(label) < y.alpha.at(label);
    }
    return false;
  });
  return found;
}

ScanReport summand_scan(const Poset& p, const DimVector& a, Int budget) {
  ScanReport report;
  Int q = euler_form(p, a);
  if (q <= 0) {
    report.pass = false;
    report.witness = a;
    report.witness_q = q;
    return report;
  }
  for (const auto& s : summands(p, a, budget)) {
    Int qs = euler_form(p, s);
    if (qs <= 0) {
      report.pass = false;
      report.witness = s;
      report.witness_q = qs;
      return report;
    }
  }
  return report;
}

}  // namespace posetrep
