#include "posetrep/incidence.hpp"

#include <algorithm>

namespace posetrep {

namespace {

// Element indices of the labels, sorted into level order.
std::vector<int> level_sorted_indices(const Poset& p, const std::vector<std::string>& labels) {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (const auto& label : labels) idx.push_back(p.index_of(label));
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return p.level_order_pos(a) < p.level_order_pos(b); });
  return idx;
}

}  // namespace

IntMatrix incidence_matrix(const Poset& p) {
  const auto& order = p.level_order();
  const std::size_t n = order.size();
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      c.at(i, j) = p.leq(order[i], order[j]) ? 1 : 0;
    }
  }
  return c;
}

IntMatrix incidence_restriction(const Poset& p, const std::vector<std::string>& x,
                                const std::vector<std::string>& y) {
  auto rows = level_sorted_indices(p, x);
  auto cols = level_sorted_indices(p, y);
  IntMatrix c(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      c.at(i, j) = p.leq(rows[i], cols[j]) ? 1 : 0;
    }
  }
  return c;
}

std::vector<std::pair<IntMatrix, IntMatrix>> frobenius_factors(const Poset& p) {
  const auto& order = p.level_order();
  const std::size_t n = order.size();
  std::vector<std::pair<IntMatrix, IntMatrix>> factors;
  for (int lev = 1; lev + 1 <= p.height(); ++lev) {
    IntMatrix f = IntMatrix::identity(n);
    IntMatrix finv = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (p.level_of_index(order[i]) != lev) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (p.level_of_index(order[j]) <= lev) continue;
        if (p.less(order[i], order[j])) {
          f.at(i, j) = 1;
          finv.at(i, j) = -1;
        }
      }
    }
    factors.emplace_back(std::move(f), std::move(finv));
  }
  return factors;
}

IntMatrix incidence_inverse(const Poset& p) {
  const std::size_t n = static_cast<std::size_t>(p.size());
  IntMatrix inv = IntMatrix::identity(n);
  for (const auto& [f, finv] : frobenius_factors(p)) {
    inv = inv * finv;
  }
  IntMatrix c = incidence_matrix(p);
  if (c * inv != IntMatrix::identity(n) || inv * c != IntMatrix::identity(n)) {
    throw InternalInconsistencyError("incidence inverse failed verification");
  }
  return inv;
}

IntMatrix mobius_matrix(const Poset& p) {
  const auto& order = p.level_order();
  const std::size_t n = order.size();
  IntMatrix mu(n, n);
  // Columns in increasing level: every r with s <= r < t is settled before t.
  for (std::size_t i = 0; i < n; ++i) {
    mu.at(i, i) = 1;
    for (std::size_t j = n; j-- > 0;) {
      if (!p.less(order[i], order[j])) continue;
      Int sum = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (p.leq(order[i], order[k]) && p.less(order[k], order[j])) {
          sum = checked_add(sum, mu.at(i, k));
        }
      }
      mu.at(i, j) = checked_neg(sum);
    }
  }
  return mu;
}

}  // namespace posetrep
