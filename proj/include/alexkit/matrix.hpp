#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>
#include <vector>

#include "alexkit/errors.hpp"

namespace alexkit {

/// Dense row-major matrix over a ring or field element type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      assert(row.size() == cols_);
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_like());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    Matrix b(r1 - r0, c1 - c0, zero_like());
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
    return b;
  }

  /// Copy with row `r` and column `c` deleted.
  Matrix minor_matrix(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1, zero_like());
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  /// Submatrix on the given row and column index lists.
  Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix m(rs.size(), cs.size(), zero_like());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  template <class F>
  auto map(F&& f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    Matrix<U> out;
    out.reset_storage(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.raw().push_back(f(data_[k]));
    return out;
  }

  std::vector<T>& raw() { return data_; }
  const std::vector<T>& raw() const { return data_; }
  void reset_storage(std::size_t rows, std::size_t cols) {
    rows_ = rows;
    cols_ = cols;
    data_.clear();
    data_.reserve(rows * cols);
  }

  /// A zero of the element type compatible with this matrix's entries.
  T zero_like() const {
    if (data_.empty()) return T{};
    return data_.front() - data_.front();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  T zero = !a.raw().empty() ? a.zero_like() : b.zero_like();
  Matrix<T> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum shape mismatch");
  for (std::size_t k = 0; k < a.raw().size(); ++k) a.raw()[k] += b.raw()[k];
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
  for (std::size_t k = 0; k < a.raw().size(); ++k) a.raw()[k] -= b.raw()[k];
  return a;
}

/// [a | b]
template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
  }
  return m;
}

/// [a ; b]
template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols(), zero);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
  }
  return m;
}

/// Block-diagonal direct sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
  return m;
}

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// element type provides an exact `divide_exact(a, b)` found by ADL.
template <class T>
T determinant(Matrix<T> m, const T& one) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  const T zero = one - one;
  T previous = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == zero) ++p;
      if (p == n) return zero;
      m.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = divide_exact(m(i, j) * m(k, k) - m(i, k) * m(k, j), previous);
      m(i, k) = zero;
    }
    previous = m(k, k);
  }
  T det = m(n - 1, n - 1);
  return negate ? zero - det : det;
}

}  // namespace alexkit
