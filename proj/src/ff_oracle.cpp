#include "posetrep/ff_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "posetrep/checked.hpp"
#include "posetrep/errors.hpp"

namespace posetrep {

namespace {

constexpr Int kSupportedPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23};

int mod_inverse(int a, int p) {
  // p is a small prime and a is nonzero mod p, so a scan is fine.
  a %= p;
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw InternalInconsistencyError("no inverse for " + std::to_string(a) + " mod " + std::to_string(p));
}

// In-place reduced row echelon form over F_p. Returns the rank; the first
// rank rows are the canonical basis, the rest are zero.
int rref_in_place(std::vector<std::vector<int>>& rows, int p) {
  if (rows.empty()) return 0;
  const std::size_t width = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < width && pivot_row < rows.size(); ++col) {
    std::size_t hit = pivot_row;
    while (hit < rows.size() && rows[hit][col] % p == 0) ++hit;
    if (hit == rows.size()) continue;
    std::swap(rows[pivot_row], rows[hit]);
    const int inv = mod_inverse(rows[pivot_row][col], p);
    for (std::size_t j = col; j < width; ++j) {
      rows[pivot_row][j] = rows[pivot_row][j] * inv % p;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row) continue;
      const int factor = rows[i][col] % p;
      if (factor == 0) continue;
      for (std::size_t j = col; j < width; ++j) {
        rows[i][j] = ((rows[i][j] - factor * rows[pivot_row][j]) % p + p) % p;
      }
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

SubspaceBasis ambient_basis(int n) {
  SubspaceBasis full;
  full.ambient = n;
  full.dim = n;
  full.rows.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) full.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return full;
}

// Zassenhaus: row reduce [A|A; B|0]; rows whose left half vanished carry a
// basis of the intersection in their right half.
SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b, int p) {
  if (a.ambient != b.ambient) {
    throw InternalInconsistencyError("intersection of subspaces of different ambients");
  }
  const std::size_t n = static_cast<std::size_t>(a.ambient);
  std::vector<std::vector<int>> block;
  block.reserve(a.rows.size() + b.rows.size());
  for (const auto& row : a.rows) {
    std::vector<int> wide(2 * n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      wide[j] = row[j];
      wide[n + j] = row[j];
    }
    block.push_back(std::move(wide));
  }
  for (const auto& row : b.rows) {
    std::vector<int> wide(2 * n, 0);
    for (std::size_t j = 0; j < n; ++j) wide[j] = row[j];
    block.push_back(std::move(wide));
  }
  rref_in_place(block, p);
  std::vector<std::vector<int>> meet;
  for (const auto& wide : block) {
    const bool left_zero = std::all_of(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(n),
                                       [](int v) { return v == 0; });
    if (!left_zero) continue;
    std::vector<int> right(wide.begin() + static_cast<std::ptrdiff_t>(n), wide.end());
    if (std::any_of(right.begin(), right.end(), [](int v) { return v != 0; })) {
      meet.push_back(std::move(right));
    }
  }
  return rref_basis(a.ambient, std::move(meet), p);
}

void require_supported_prime(Int p) {
  if (!is_prime_supported(p)) {
    throw InputError("unsupported field size " + std::to_string(p) +
                     ": expected a prime at most 23");
  }
}

// A subspace count that overflows 64 bits exceeds any representable budget.
Int subspace_count_for_budget(Int n, Int k, Int q, Int budget) {
  Int total = 0;
  try {
    total = gaussian_binomial(n, k, q);
  } catch (const OverflowError&) {
    throw BudgetExceededError("subspace count overflows, far over the budget of " +
                              std::to_string(budget));
  }
  if (total > budget) {
    throw BudgetExceededError("subspace enumeration would produce " + std::to_string(total) +
                              " bases, over the budget of " + std::to_string(budget));
  }
  return total;
}

// Shared machinery for exact point counting and for maximizing the top-level
// sum. Elements are visited uppers-first so each element's constraint space
// is the intersection of already-chosen covers.
struct PointWalker {
  const Poset& poset;
  int p;
  Int budget;
  Int materialized = 0;

  int ambient = 0;
  std::vector<Int> alpha;                       // by element index
  std::vector<int> order;                       // element indices, uppers first
  std::vector<std::vector<int>> covers_above;   // by element index
  std::vector<bool> down_empty;                 // by element index
  std::vector<std::optional<SubspaceBasis>> chosen;  // by element index
  std::map<std::pair<int, int>, std::vector<SubspaceBasis>> coord_cache;

  PointWalker(const Poset& po, const DimVector& a, Int q, Int budget_limit, int ambient_dim)
      : poset(po), p(static_cast<int>(q)), budget(budget_limit), ambient(ambient_dim) {
    const std::size_t n = poset.size();
    alpha.resize(n);
    for (std::size_t i = 0; i < n; ++i) alpha[i] = a.alpha.at(poset.labels()[i]);
    covers_above.resize(n);
    for (const auto& [lo, hi] : poset.hasse_covers()) {
      covers_above[static_cast<std::size_t>(poset.index_of(lo))].push_back(poset.index_of(hi));
    }
    down_empty.resize(n, true);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (poset.less(static_cast<int>(j), static_cast<int>(i))) down_empty[i] = false;
      }
    }
    chosen.resize(n);
  }

  void charge(Int built) {
    materialized = checked_add(materialized, built);
    if (materialized > budget) {
      throw BudgetExceededError("point enumeration budget of " + std::to_string(budget) +
                                " bases exceeded");
    }
  }

  const std::vector<SubspaceBasis>& coordinate_list(int m, int k) {
    const auto key = std::make_pair(m, k);
    auto it = coord_cache.find(key);
    if (it != coord_cache.end()) return it->second;
    charge(subspace_count_for_budget(m, k, p, budget));
    auto list = enumerate_subspaces(m, k, p, budget);
    return coord_cache.emplace(key, std::move(list)).first->second;
  }

  // Intersection of the chosen covers above s; empty optional means the
  // constraint is the full ambient space.
  std::optional<SubspaceBasis> constraint(int s) {
    std::optional<SubspaceBasis> meet;
    for (int u : covers_above[static_cast<std::size_t>(s)]) {
      const SubspaceBasis& above = *chosen[static_cast<std::size_t>(u)];
      meet = meet ? intersect(*meet, above, p) : above;
    }
    return meet;
  }

  SubspaceBasis lift(const SubspaceBasis& coords, const SubspaceBasis& frame) {
    charge(1);
    std::vector<std::vector<int>> rows;
    rows.reserve(coords.rows.size());
    for (const auto& crow : coords.rows) {
      std::vector<int> row(static_cast<std::size_t>(ambient), 0);
      for (std::size_t j = 0; j < crow.size(); ++j) {
        if (crow[j] == 0) continue;
        for (std::size_t c = 0; c < row.size(); ++c) {
          row[c] = (row[c] + crow[j] * frame.rows[j][c]) % p;
        }
      }
      rows.push_back(std::move(row));
    }
    return rref_basis(ambient, std::move(rows), p);
  }

  // Exact count of completions of the current partial choice.
  Int count_from(std::size_t i) {
    if (i == order.size()) return 1;
    const int s = order[i];
    const Int k = alpha[static_cast<std::size_t>(s)];
    const auto frame = constraint(s);
    const int m = frame ? frame->dim : ambient;
    if (k < 0 || k > m) return 0;
    if (down_empty[static_cast<std::size_t>(s)]) {
      // Nothing later looks inside this subspace, so its choices are a
      // pure multiplicative factor.
      return checked_mul(gaussian_binomial(m, k, p), count_from(i + 1));
    }
    Int total = 0;
    for (const SubspaceBasis& coords : coordinate_list(m, static_cast<int>(k))) {
      chosen[static_cast<std::size_t>(s)] = frame ? lift(coords, *frame) : coords;
      total = checked_add(total, count_from(i + 1));
    }
    chosen[static_cast<std::size_t>(s)].reset();
    return total;
  }

  // Whether the current partial choice extends to a full point.
  bool exists_from(std::size_t i) {
    if (i == order.size()) return true;
    const int s = order[i];
    const Int k = alpha[static_cast<std::size_t>(s)];
    const auto frame = constraint(s);
    const int m = frame ? frame->dim : ambient;
    if (k < 0 || k > m) return false;
    if (down_empty[static_cast<std::size_t>(s)]) return exists_from(i + 1);
    for (const SubspaceBasis& coords : coordinate_list(m, static_cast<int>(k))) {
      chosen[static_cast<std::size_t>(s)] = frame ? lift(coords, *frame) : coords;
      if (exists_from(i + 1)) {
        chosen[static_cast<std::size_t>(s)].reset();
        return true;
      }
    }
    chosen[static_cast<std::size_t>(s)].reset();
    return false;
  }
};

void check_count_inputs(const DimVector& a, Int q) {
  require_supported_prime(q);
  if (a.alpha0 < 0) throw InvalidDimensionsError("ambient dimension must be non-negative");
}

std::vector<int> default_order(const Poset& p) {
  return p.level_order();
}

Int run_count(const Poset& p, const DimVector& a, Int q, std::vector<int> order, Int budget) {
  check_count_inputs(a, q);
  dim_row(p, a);  // validates label coverage
  if (p.empty()) return 1;
  if (a.alpha0 > 12) {
    // Ambient coordinates are small ints; anything larger is out of reach
    // for exhaustive enumeration anyway.
    throw BudgetExceededError("ambient dimension " + std::to_string(a.alpha0) +
                              " too large for point enumeration");
  }
  PointWalker walker(p, a, q, budget, static_cast<int>(a.alpha0));
  walker.order = std::move(order);
  return walker.count_from(0);
}

mpq_class to_rational(Int v) { return mpq_class(static_cast<long>(v)); }

std::string rational_string(const mpq_class& v) { return v.get_str(); }

}  // namespace

bool is_prime_supported(Int p) {
  return std::find(std::begin(kSupportedPrimes), std::end(kSupportedPrimes), p) !=
         std::end(kSupportedPrimes);
}

Int gaussian_binomial(Int n, Int k, Int q) {
  if (n < 0) throw InvalidDimensionsError("gaussian binomial needs n >= 0");
  if (q < 2) throw InvalidDimensionsError("gaussian binomial needs q >= 2");
  if (k < 0 || k > n) return 0;
  k = std::min(k, checked_sub(n, k));
  // result after step i is the exact binomial [n-k+i, i]_q, so each division
  // is exact.
  Int result = 1;
  Int q_high = 1;  // q^(n-k)
  for (Int i = 0; i < n - k; ++i) q_high = checked_mul(q_high, q);
  Int q_low = 1;  // q^i
  for (Int i = 1; i <= k; ++i) {
    q_high = checked_mul(q_high, q);
    q_low = checked_mul(q_low, q);
    const Int numer = checked_mul(result, checked_sub(q_high, 1));
    const Int denom = checked_sub(q_low, 1);
    if (numer % denom != 0) {
      throw InternalInconsistencyError("gaussian binomial division not exact");
    }
    result = numer / denom;
  }
  return result;
}

SubspaceBasis rref_basis(int ambient, std::vector<std::vector<int>> rows, Int p) {
  require_supported_prime(p);
  for (const auto& row : rows) {
    if (row.size() != static_cast<std::size_t>(ambient)) {
      throw InvalidDimensionsError("basis row width does not match ambient dimension");
    }
  }
  const int rank = rref_in_place(rows, static_cast<int>(p));
  rows.resize(static_cast<std::size_t>(rank));
  SubspaceBasis basis;
  basis.ambient = ambient;
  basis.dim = rank;
  basis.rows = std::move(rows);
  return basis;
}

std::vector<SubspaceBasis> enumerate_subspaces(int n, int k, Int p, Int budget) {
  require_supported_prime(p);
  if (n < 0) throw InvalidDimensionsError("ambient dimension must be non-negative");
  if (k < 0 || k > n) return {};
  const Int total = subspace_count_for_budget(n, k, p, budget);
  const int prime = static_cast<int>(p);
  std::vector<SubspaceBasis> out;
  out.reserve(static_cast<std::size_t>(total));

  // Pivot columns in lexicographic order; every subspace has exactly one
  // echelon basis per pattern, with free entries right of each pivot in
  // non-pivot columns.
  std::vector<int> pivots(static_cast<std::size_t>(k));
  std::iota(pivots.begin(), pivots.end(), 0);
  while (true) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::pair<int, int>> free_cells;  // (row, col)
    for (int r = 0; r < k; ++r) {
      for (int c = pivots[static_cast<std::size_t>(r)] + 1; c < n; ++c) {
        if (!is_pivot[static_cast<std::size_t>(c)]) free_cells.emplace_back(r, c);
      }
    }
    std::vector<int> fill(free_cells.size(), 0);
    while (true) {
      SubspaceBasis basis;
      basis.ambient = n;
      basis.dim = k;
      basis.rows.assign(static_cast<std::size_t>(k),
                        std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int r = 0; r < k; ++r) {
        basis.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(pivots[static_cast<std::size_t>(r)])] = 1;
      }
      for (std::size_t cell = 0; cell < free_cells.size(); ++cell) {
        basis.rows[static_cast<std::size_t>(free_cells[cell].first)]
                  [static_cast<std::size_t>(free_cells[cell].second)] = fill[cell];
      }
      out.push_back(std::move(basis));
      bool wrapped = true;
      for (std::size_t cell = fill.size(); cell-- > 0;) {
        if (++fill[cell] < prime) {
          wrapped = false;
          break;
        }
        fill[cell] = 0;
      }
      if (wrapped) break;
    }
    // Next pivot pattern.
    int move = k - 1;
    while (move >= 0 && pivots[static_cast<std::size_t>(move)] == n - k + move) --move;
    if (move < 0) break;
    ++pivots[static_cast<std::size_t>(move)];
    for (int r = move + 1; r < k; ++r) {
      pivots[static_cast<std::size_t>(r)] = pivots[static_cast<std::size_t>(r - 1)] + 1;
    }
  }
  if (static_cast<Int>(out.size()) != total) {
    throw InternalInconsistencyError("subspace enumeration count mismatch");
  }
  return out;
}

Int count_points(const Poset& p, const DimVector& a, Int q, Int budget) {
  return run_count(p, a, q, default_order(p), budget);
}

Int count_points(const Poset& p, const DimVector& a, Int q,
                 const std::vector<std::string>& order, Int budget) {
  std::vector<int> indices;
  indices.reserve(order.size());
  std::vector<bool> seen(p.size(), false);
  for (const auto& label : order) {
    const int idx = p.index_of(label);
    if (seen[static_cast<std::size_t>(idx)]) {
      throw InputError("processing order repeats element '" + label + "'");
    }
    seen[static_cast<std::size_t>(idx)] = true;
    indices.push_back(idx);
  }
  if (indices.size() != p.size()) {
    throw InputError("processing order must list every element exactly once");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = i + 1; j < indices.size(); ++j) {
      if (p.less(indices[i], indices[j])) {
        throw InputError("processing order must place larger elements first");
      }
    }
  }
  return run_count(p, a, q, std::move(indices), budget);
}

Int max_sum_dim_empirical(const Poset& p, const DimVector& a, Int q, Int budget) {
  check_count_inputs(a, q);
  dim_row(p, a);
  if (p.empty()) return 0;

  Int top_total = 0;
  for (const auto& label : p.maximal_elements()) {
    top_total = checked_add(top_total, std::max<Int>(a.alpha.at(label), 0));
  }
  const Int compressed = std::min(a.alpha0, top_total);
  if (compressed > 12) {
    throw BudgetExceededError("search ambient dimension " + std::to_string(compressed) +
                              " too large for point enumeration");
  }

  PointWalker walker(p, a, q, budget, static_cast<int>(compressed));
  walker.order = p.level_order();
  const std::size_t top_count = p.maximal_elements().size();

  Int best = -1;
  std::vector<std::vector<int>> stacked;
  auto top_sum_dim = [&]() {
    stacked.clear();
    for (std::size_t i = 0; i < top_count; ++i) {
      const auto& basis = *walker.chosen[static_cast<std::size_t>(walker.order[i])];
      stacked.insert(stacked.end(), basis.rows.begin(), basis.rows.end());
    }
    auto rows = stacked;
    return static_cast<Int>(rref_in_place(rows, walker.p));
  };

  auto scan = [&](auto&& self, std::size_t i) -> void {
    if (i == top_count) {
      const Int d = top_sum_dim();
      if (d > best && walker.exists_from(top_count)) best = d;
      return;
    }
    const int s = walker.order[i];
    const Int k = walker.alpha[static_cast<std::size_t>(s)];
    if (k < 0 || k > compressed) return;
    if (i == 0) {
      // Pinning the first top-level subspace to a coordinate subspace loses
      // no maximum: GL acts transitively on subspaces of one dimension, and
      // the point set and the objective are both GL-stable.
      SubspaceBasis pinned;
      pinned.ambient = static_cast<int>(compressed);
      pinned.dim = static_cast<int>(k);
      pinned.rows.assign(static_cast<std::size_t>(k),
                         std::vector<int>(static_cast<std::size_t>(compressed), 0));
      for (Int r = 0; r < k; ++r) {
        pinned.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
      }
      walker.chosen[static_cast<std::size_t>(s)] = std::move(pinned);
      self(self, i + 1);
      walker.chosen[static_cast<std::size_t>(s)].reset();
      return;
    }
    for (const SubspaceBasis& coords :
         walker.coordinate_list(static_cast<int>(compressed), static_cast<int>(k))) {
      walker.charge(1);
      walker.chosen[static_cast<std::size_t>(s)] = coords;
      self(self, i + 1);
    }
    walker.chosen[static_cast<std::size_t>(s)].reset();
  };
  scan(scan, 0);

  if (best < 0) {
    throw EmptyVarietyError("representation variety has no points over F_" + std::to_string(q));
  }
  return best;
}

FitReport fit_dimension(const Poset& p, const DimVector& a, const std::vector<Int>& primes,
                        Int claimed_dim, Int budget) {
  if (claimed_dim < 0) throw InputError("claimed dimension must be non-negative");
  std::set<Int> distinct;
  for (Int q : primes) {
    require_supported_prime(q);
    if (!distinct.insert(q).second) {
      throw InputError("duplicate prime " + std::to_string(q) + " in fit request");
    }
  }
  const std::size_t needed = static_cast<std::size_t>(claimed_dim) + 1;
  if (primes.size() < needed) {
    throw InsufficientPrimesError("fitting a degree-" + std::to_string(claimed_dim) +
                                  " polynomial needs at least " + std::to_string(needed) +
                                  " primes, got " + std::to_string(primes.size()));
  }

  FitReport report;
  report.claimed_dim = claimed_dim;
  report.counts.reserve(primes.size());
  for (Int q : primes) {
    report.counts.emplace_back(q, count_points(p, a, q, budget));
  }

  // Newton divided differences through the first claimed_dim + 1 points,
  // expanded to monomial coefficients, all exact rationals.
  std::vector<mpq_class> xs, dd;
  for (std::size_t i = 0; i < needed; ++i) {
    xs.push_back(to_rational(report.counts[i].first));
    dd.push_back(to_rational(report.counts[i].second));
  }
  for (std::size_t level = 1; level < needed; ++level) {
    for (std::size_t i = needed; i-- > level;) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<mpq_class> coeffs(needed, mpq_class(0));
  std::vector<mpq_class> newton_basis{mpq_class(1)};
  for (std::size_t i = 0; i < needed; ++i) {
    for (std::size_t j = 0; j < newton_basis.size(); ++j) coeffs[j] += dd[i] * newton_basis[j];
    if (i + 1 < needed) {
      newton_basis.push_back(mpq_class(0));
      for (std::size_t j = newton_basis.size(); j-- > 1;) {
        newton_basis[j] = newton_basis[j - 1] - xs[i] * newton_basis[j];
      }
      newton_basis[0] = -xs[i] * newton_basis[0];
    }
  }
  int degree = -1;  // degree of the zero polynomial
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) degree = static_cast<int>(j);
  }
  report.fitted_degree = degree;
  report.poly.reserve(coeffs.size());
  for (const auto& c : coeffs) report.poly.push_back(rational_string(c));

  auto evaluate = [&coeffs](Int q) {
    mpq_class value(0);
    for (std::size_t j = coeffs.size(); j-- > 0;) {
      value = value * to_rational(q) + coeffs[j];
    }
    return value;
  };
  bool validated = true;
  for (std::size_t i = needed; i < primes.size(); ++i) {
    const mpq_class residual = to_rational(report.counts[i].second) - evaluate(report.counts[i].first);
    report.residuals.emplace_back(report.counts[i].first, rational_string(residual));
    if (residual != 0) validated = false;
  }

  if (degree != claimed_dim) {
    report.verdict = "INCONSISTENT";
    report.note = "interpolated degree " + std::to_string(report.fitted_degree) +
                  " does not match the claimed dimension";
    return report;
  }
  if (primes.size() == needed) {
    throw InsufficientPrimesError(
        "a CONSISTENT verdict needs at least one prime beyond the " + std::to_string(needed) +
        " used for interpolation");
  }
  if (!validated) {
    report.verdict = "INCONSISTENT";
    report.note = "interpolant fails to reproduce the validation counts";
    return report;
  }
  report.verdict = "CONSISTENT";
  report.note = "interpolation evidence only: polynomial growth of the counts is assumed, not proved";
  return report;
}

}  // namespace posetrep
