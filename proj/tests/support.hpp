#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "posetrep/forms.hpp"
#include "posetrep/poset.hpp"

namespace testsupport {

using posetrep::DimVector;
using posetrep::Int;
using posetrep::Poset;

// Deterministic integer in [lo, hi]. Plain modulo keeps the sequence
// identical across standard libraries.
inline Int pick(std::mt19937& g, Int lo, Int hi) {
  return lo + static_cast<Int>(g() % static_cast<std::uint32_t>(hi - lo + 1));
}

// Random poset of 1..max_elements elements: a shuffled copy of the label
// list serves as a topological order, and each forward pair becomes a
// generating relation with the given percent probability.
inline Poset random_poset(std::mt19937& g, int max_elements, int percent = 40) {
  int n = static_cast<int>(pick(g, 1, max_elements));
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  std::vector<std::string> topo = labels;
  std::shuffle(topo.begin(), topo.end(), g);
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (pick(g, 1, 100) <= percent) rels.emplace_back(topo[i], topo[j]);
    }
  }
  return posetrep::build_poset(labels, rels);
}

// Constructive admissible sample: draw c_s in [0,3], set alpha_s as the sum
// of c over the down-set (so alpha = c * C), and give alpha0 slack over both
// the coordinate sum and the largest entry. Resamples until every entry
// (alpha0 included) is at most cap.
inline DimVector random_admissible(std::mt19937& g, const Poset& p, Int cap = 8) {
  for (;;) {
    std::map<std::string, Int> c;
    for (const auto& label : p.labels()) c[label] = pick(g, 0, 3);
    DimVector a;
    Int total = 0;
    Int biggest = 0;
    for (const auto& label : p.labels()) {
      Int v = c[label];
      for (const auto& other : p.labels()) {
        if (p.less(other, label)) v += c[other];
      }
      a.alpha[label] = v;
      biggest = std::max(biggest, v);
    }
    for (const auto& [label, cs] : c) total += cs;
    a.alpha0 = std::max(total, biggest) + pick(g, 0, 2);
    bool small = a.alpha0 <= cap;
    for (const auto& [label, v] : a.alpha) small = small && v <= cap;
    if (small) return a;
  }
}

inline DimVector random_integer_vector(std::mt19937& g, const Poset& p, Int lo, Int hi) {
  DimVector a;
  a.alpha0 = pick(g, lo, hi);
  for (const auto& label : p.labels()) a.alpha[label] = pick(g, lo, hi);
  return a;
}

// Longest chain cardinality by fixpoint relaxation, independent of the
// level machinery inside Poset.
inline int longest_chain(const Poset& p) {
  int n = p.size();
  if (n == 0) return 0;
  std::vector<int> len(n, 1);
  for (int pass = 0; pass < n; ++pass) {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (p.less(s, t)) len[s] = std::max(len[s], 1 + len[t]);
      }
    }
  }
  return *std::max_element(len.begin(), len.end());
}

// The two conditions a level assignment must satisfy: order compatibility
// (r < s forces lower level) and upward coverage (every element below the
// top of its run sees some element on each higher level above it).
inline bool level_assignment_valid(const Poset& p, const std::vector<int>& level, int top) {
  int n = p.size();
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      if (p.less(r, s) && level[r] >= level[s]) return false;
    }
  }
  for (int t = 0; t < n; ++t) {
    for (int j = level[t] + 1; j <= top; ++j) {
      bool found = false;
      for (int s = 0; s < n; ++s) {
        if (level[s] == j && p.less(t, s)) found = true;
      }
      if (!found) return false;
    }
  }
  return true;
}

inline Poset example1() {
  return posetrep::build_poset({"1", "2", "3", "4", "5", "6", "7"},
                               {{"1", "3"},
                                {"1", "4"},
                                {"1", "5"},
                                {"2", "4"},
                                {"2", "5"},
                                {"3", "6"},
                                {"3", "7"},
                                {"4", "6"},
                                {"4", "7"},
                                {"5", "7"}});
}

inline DimVector example1_alpha() {
  return DimVector{8, {{"1", 1}, {"2", 2}, {"3", 2}, {"4", 4}, {"5", 5}, {"6", 6}, {"7", 7}}};
}

inline Poset example2() {
  return posetrep::build_poset({"1", "2", "3", "4"},
                               {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}});
}

inline DimVector example2_alpha() {
  return DimVector{4, {{"1", 2}, {"2", 2}, {"3", 3}, {"4", 3}}};
}

// The same square with an extra minimal element "5" under both minima.
inline Poset example2_enlarged() {
  return posetrep::build_poset(
      {"1", "2", "3", "4", "5"},
      {{"1", "3"}, {"1", "4"}, {"2", "3"}, {"2", "4"}, {"5", "1"}, {"5", "2"}});
}

inline DimVector example2_enlarged_alpha() {
  return DimVector{4, {{"1", 2}, {"2", 2}, {"3", 3}, {"4", 3}, {"5", 1}}};
}

inline Poset example3() {
  return posetrep::build_poset({"1", "2", "3"}, {{"1", "3"}, {"2", "3"}});
}

inline DimVector example3_alpha() {
  return DimVector{4, {{"1", 2}, {"2", 2}, {"3", 3}}};
}

}  // namespace testsupport
