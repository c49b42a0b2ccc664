#include "posetrep/int_matrix.hpp"

#include <sstream>

namespace posetrep {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_) {
    throw InternalInconsistencyError("entry count does not match matrix shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw InternalInconsistencyError("matrix product shape mismatch");
  }
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Int v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) = checked_add(out.at(i, j), checked_mul(v, rhs.at(k, j)));
      }
    }
  }
  return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw InternalInconsistencyError("matrix sum shape mismatch");
  }
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) {
    out.a_[i] = checked_add(a_[i], rhs.a_[i]);
  }
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = checked_neg(a_[i]);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  }
  return out;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i].assign(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  return out;
}

std::vector<Int> row_times_matrix(const std::vector<Int>& row, const IntMatrix& m) {
  if (row.size() != m.rows()) {
    throw InternalInconsistencyError("row-vector product shape mismatch");
  }
  std::vector<Int> out(m.cols(), 0);
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out[j] = checked_add(out[j], checked_mul(row[k], m.at(k, j)));
    }
  }
  return out;
}

}  // namespace posetrep
