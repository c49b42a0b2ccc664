#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "posetrep/errors.hpp"

namespace posetrep {

// A finite poset over string labels. The strict order is stored transitively
// closed; height, the level partition and the level order are computed once
// at construction and the value is immutable afterwards, so concurrent reads
// need no synchronization.
//
// Levels: level_of(s) = h - uh(s) + 1, where uh(s) is the number of elements
// of the longest chain having s as its minimum. Level h holds the maximal
// elements, level 1 the elements with the deepest chains above them. Each
// level is an antichain, and r < s forces level(r) < level(s).
//
// level_order lists the elements of level h first, then level h-1, and so
// on, keeping the original label order inside a level. All matrix-producing
// operations downstream index rows and columns by this order.
class Poset {
 public:
  Poset() = default;  // the empty poset, height 0

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const std::string& label) const {
    return index_.find(label) != index_.end();
  }

  // Index of a label in the original labels() order; UnknownLabelError if
  // absent.
  int index_of(const std::string& label) const;

  bool less(int s, int t) const { return lt_[static_cast<size_t>(s) * labels_.size() + t]; }
  bool leq(int s, int t) const { return s == t || less(s, t); }
  bool less(const std::string& s, const std::string& t) const {
    return less(index_of(s), index_of(t));
  }

  int height() const { return height_; }

  // 1-based level index, in [1, height()].
  int level_of_index(int s) const { return level_[s]; }
  int level_of(const std::string& s) const { return level_[index_of(s)]; }

  // Levels T_h, ..., T_1 as label sets, topmost first.
  std::vector<std::vector<std::string>> level_partition() const;

  // Element indices sorted by (level descending, original position).
  const std::vector<int>& level_order() const { return level_order_; }
  // Position of element index s within level_order().
  int level_order_pos(int s) const { return order_pos_[s]; }

  // Strict predecessors of s, in original label order.
  std::vector<std::string> down_set(const std::string& s) const;
  std::vector<int> down_set_indices(int s) const;

  std::vector<std::string> maximal_elements() const;

  // Covering pairs (s, t): s < t with nothing strictly between. Their
  // transitive closure is the full order.
  std::vector<std::pair<std::string, std::string>> hasse_covers() const;

 private:
  friend Poset build_poset(std::vector<std::string> labels,
                           const std::vector<std::pair<std::string, std::string>>& relations);

  void finalize();  // closure done; compute height, levels, order

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<bool> lt_;  // size() x size(), row-major strict order
  int height_ = 0;
  std::vector<int> level_;
  std::vector<int> level_order_;
  std::vector<int> order_pos_;
};

// Builds a poset from labels and arbitrary strict relations (covers or any
// other generating set); the transitive closure is taken. Labels must be
// unique and free of '<', ':', ';', '=', '#' and whitespace.
// Throws DuplicateLabelError, UnknownLabelError, InvalidLabelError,
// CycleError.
Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& relations);

// P with a new top element "0" above everything. LabelCollisionError if a
// label "0" already exists.
Poset enlarge(const Poset& p);

// Induced subposet on P minus {x}.
Poset remove_element(const Poset& p, const std::string& x);

// Induced subposet on the given subset, keeping the original label order.
Poset induced_subposet(const Poset& p, const std::vector<std::string>& subset);

}  // namespace posetrep
