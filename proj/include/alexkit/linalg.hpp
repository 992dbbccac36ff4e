#pragma once

#include <cstddef>
#include <vector>

#include "alexkit/field.hpp"
#include "alexkit/matrix.hpp"

namespace alexkit {

namespace detail {

inline std::size_t pivot_weight(const Rational&) { return 0; }
inline std::size_t pivot_weight(const RationalFunction& x) {
  return static_cast<std::size_t>(x.numerator().spread() + x.denominator().spread());
}

}  // namespace detail

/// Reduced row echelon form over an exact field. Pivot columns are taken
/// left to right; within a column the entry of smallest size wins, ties going
/// to the upper row.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    for (std::size_t i = row; i < m.rows(); ++i) {
      if (is_zero_scalar(m(i, col))) continue;
      if (best == m.rows() || detail::pivot_weight(m(i, col)) < detail::pivot_weight(m(best, col))) best = i;
    }
    if (best == m.rows()) continue;
    m.swap_rows(row, best);
    const F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero_scalar(m(i, col))) continue;
      const F factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero_scalar(m(row, j))) m(i, j) = m(i, j) - factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

/// Columns form a basis of the right null space of m.
template <class F>
Matrix<F> kernel_basis(Matrix<F> m) {
  const std::size_t n = m.cols();
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix<F> k(n, n - pivots.size(), F(0));
  std::size_t out = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = F(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], out) = -m(r, free);
    ++out;
  }
  return k;
}

std::size_t rank(const Matrix<Complex>& m, double rel_tol = kDefaultRankTolerance);
Matrix<Complex> kernel_basis(const Matrix<Complex>& m, double rel_tol = kDefaultRankTolerance);

}  // namespace alexkit
