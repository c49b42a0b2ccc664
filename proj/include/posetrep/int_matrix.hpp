#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "posetrep/checked.hpp"
#include "posetrep/errors.hpp"

namespace posetrep {

// Dense row-major matrix of exact 64-bit integers. All arithmetic is
// overflow-checked: a product that does not fit raises OverflowError rather
// than producing a wrapped value. Values are immutable in practice: the
// mutating at() exists for construction only.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix negated() const;
  IntMatrix transposed() const;

  bool operator==(const IntMatrix& rhs) const = default;

  // Rows of space-separated integers, one line per row.
  std::string to_text() const;

  std::vector<std::vector<Int>> to_rows() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

// row * M with checked arithmetic; row.size() must equal M.rows().
std::vector<Int> row_times_matrix(const std::vector<Int>& row, const IntMatrix& m);

}  // namespace posetrep
