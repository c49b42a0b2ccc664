#include "posetrep/poset.hpp"

#include <algorithm>
#include <cctype>

namespace posetrep {

namespace {

void validate_label(const std::string& label) {
  if (label.empty()) {
    throw InvalidLabelError("empty element label");
  }
  for (char ch : label) {
    if (ch == '<' || ch == ':' || ch == ';' || ch == '=' || ch == '#' ||
        std::isspace(static_cast<unsigned char>(ch))) {
      throw InvalidLabelError("label '" + label + "' contains a reserved character");
    }
  }
}

}  // namespace

int Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    throw UnknownLabelError("unknown element '" + label + "'");
  }
  return it->second;
}

void Poset::finalize() {
  const int n = size();
  // uh(s): longest chain upward from s, via memoized descent over the closure.
  std::vector<int> uh(n, 0);
  std::vector<int> stack;
  for (int start = 0; start < n; ++start) {
    if (uh[start] != 0) continue;
    stack.push_back(start);
    while (!stack.empty()) {
      int s = stack.back();
      int best = 0;
      bool ready = true;
      for (int t = 0; t < n; ++t) {
        if (!less(s, t)) continue;
        if (uh[t] == 0) {
          stack.push_back(t);
          ready = false;
        } else {
          best = std::max(best, uh[t]);
        }
      }
      if (ready) {
        uh[s] = best + 1;
        stack.pop_back();
      }
    }
  }

  height_ = 0;
  for (int s = 0; s < n; ++s) height_ = std::max(height_, uh[s]);

  level_.assign(n, 0);
  for (int s = 0; s < n; ++s) level_[s] = height_ - uh[s] + 1;

  level_order_.clear();
  level_order_.reserve(n);
  for (int lev = height_; lev >= 1; --lev) {
    for (int s = 0; s < n; ++s) {
      if (level_[s] == lev) level_order_.push_back(s);
    }
  }
  order_pos_.assign(n, -1);
  for (int pos = 0; pos < n; ++pos) order_pos_[level_order_[pos]] = pos;
}

std::vector<std::vector<std::string>> Poset::level_partition() const {
  std::vector<std::vector<std::string>> out(static_cast<size_t>(height_));
  for (int s : level_order_) {
    out[static_cast<size_t>(height_ - level_[s])].push_back(labels_[s]);
  }
  return out;
}

std::vector<int> Poset::down_set_indices(int s) const {
  std::vector<int> out;
  for (int t = 0; t < size(); ++t) {
    if (less(t, s)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> Poset::down_set(const std::string& s) const {
  std::vector<std::string> out;
  for (int t : down_set_indices(index_of(s))) out.push_back(labels_[t]);
  return out;
}

std::vector<std::string> Poset::maximal_elements() const {
  std::vector<std::string> out;
  for (int s = 0; s < size(); ++s) {
    bool maximal = true;
    for (int t = 0; t < size(); ++t) {
      if (less(s, t)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(labels_[s]);
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> Poset::hasse_covers() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int s = 0; s < size(); ++s) {
    for (int t = 0; t < size(); ++t) {
      if (!less(s, t)) continue;
      bool cover = true;
      for (int u = 0; u < size(); ++u) {
        if (less(s, u) && less(u, t)) {
          cover = false;
          break;
        }
      }
      if (cover) out.emplace_back(labels_[s], labels_[t]);
    }
  }
  return out;
}

Poset build_poset(std::vector<std::string> labels,
                  const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  p.labels_ = std::move(labels);
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    validate_label(p.labels_[i]);
    if (!p.index_.emplace(p.labels_[i], i).second) {
      throw DuplicateLabelError("duplicate element '" + p.labels_[i] + "'");
    }
  }

  p.lt_.assign(static_cast<size_t>(n) * n, false);
  auto set_lt = [&](int s, int t) { p.lt_[static_cast<size_t>(s) * n + t] = true; };
  for (const auto& [a, b] : relations) {
    set_lt(p.index_of(a), p.index_of(b));
  }

  // Warshall closure.
  for (int k = 0; k < n; ++k) {
    for (int s = 0; s < n; ++s) {
      if (!p.less(s, k)) continue;
      for (int t = 0; t < n; ++t) {
        if (p.less(k, t)) set_lt(s, t);
      }
    }
  }

  for (int s = 0; s < n; ++s) {
    if (p.less(s, s)) {
      throw CycleError("relations imply '" + p.labels_[s] + "' < '" + p.labels_[s] + "'");
    }
  }

  p.finalize();
  return p;
}

Poset enlarge(const Poset& p) {
  if (p.contains("0")) {
    throw LabelCollisionError("cannot enlarge: label '0' already present");
  }
  std::vector<std::string> labels = p.labels();
  labels.emplace_back("0");
  std::vector<std::pair<std::string, std::string>> relations;
  for (int s = 0; s < p.size(); ++s) {
    for (int t = 0; t < p.size(); ++t) {
      if (p.less(s, t)) relations.emplace_back(p.labels()[s], p.labels()[t]);
    }
    relations.emplace_back(p.labels()[s], "0");
  }
  return build_poset(std::move(labels), relations);
}

Poset induced_subposet(const Poset& p, const std::vector<std::string>& subset) {
  std::vector<bool> keep(static_cast<size_t>(p.size()), false);
  for (const auto& label : subset) keep[static_cast<size_t>(p.index_of(label))] = true;

  std::vector<std::string> labels;
  for (int s = 0; s < p.size(); ++s) {
    if (keep[static_cast<size_t>(s)]) labels.push_back(p.labels()[s]);
  }
  std::vector<std::pair<std::string, std::string>> relations;
  for (int s = 0; s < p.size(); ++s) {
    if (!keep[static_cast<size_t>(s)]) continue;
    for (int t = 0; t < p.size(); ++t) {
      if (keep[static_cast<size_t>(t)] && p.less(s, t)) {
        relations.emplace_back(p.labels()[s], p.labels()[t]);
      }
    }
  }
  return build_poset(std::move(labels), relations);
}

Poset remove_element(const Poset& p, const std::string& x) {
  int xi = p.index_of(x);
  std::vector<std::string> rest;
  for (int s = 0; s < p.size(); ++s) {
    if (s != xi) rest.push_back(p.labels()[s]);
  }
  return induced_subposet(p, rest);
}

}  // namespace posetrep
