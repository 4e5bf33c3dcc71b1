#pragma once

// Dense matrices over the rationals with exact elimination. Sizes here are
// small (degreewise differential blocks), so a straightforward reduced row
// echelon form with first-nonzero pivoting is all that is needed.

#include <stdexcept>
#include <vector>

#include "hilali/rational.hpp"

namespace hilali {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Rational& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

 private:
  size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct RankKernel {
  size_t rank = 0;
  std::vector<std::vector<Rational>> kernel_basis;  // right kernel
};

/// Exact rank and a basis of the right kernel; rank + kernel size = cols.
inline RankKernel rank_and_kernel(RationalMatrix m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<size_t> pivot_col;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    while (p < rows && m.at(p, col).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (size_t j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (size_t j = col; j < cols; ++j) m.at(row, j) *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col);
      for (size_t j = col; j < cols; ++j)
        m.at(r, j) -= f * m.at(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  RankKernel out;
  out.rank = row;
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = Rational(1);
    for (size_t i = 0; i < pivot_col.size(); ++i)
      v[pivot_col[i]] = -m.at(i, f);
    out.kernel_basis.push_back(std::move(v));
  }
  return out;
}

inline size_t matrix_rank(const RationalMatrix& m) {
  return rank_and_kernel(m).rank;
}

/// True iff v lies in the span of the columns of m.
inline bool in_column_span(const RationalMatrix& m,
                           const std::vector<Rational>& v) {
  if (v.size() != m.rows())
    throw std::invalid_argument("in_column_span: dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (size_t r = 0; r < m.rows(); ++r) {
    for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = v[r];
  }
  return matrix_rank(aug) == matrix_rank(m);
}

}  // namespace hilali
