#pragma once

#include <cstddef>
#include <variant>

#include "alexkit/errors.hpp"
#include "alexkit/field.hpp"
#include "alexkit/linalg.hpp"
#include "alexkit/matrix.hpp"

namespace alexkit {

/// Linear span  src <-left- mid -right-> tgt  with maps stored as matrices
/// (left: src x mid, right: tgt x mid).
template <class F>
struct Span {
  Matrix<F> left;
  Matrix<F> right;

  std::size_t src_dim() const noexcept { return left.rows(); }
  std::size_t tgt_dim() const noexcept { return right.rows(); }
  std::size_t mid_dim() const noexcept { return left.cols(); }
};

using AnySpan = std::variant<Span<RationalFunction>, Span<Rational>, Span<Complex>>;

namespace detail {

template <class F>
std::size_t field_rank(const Matrix<F>& m, double) {
  return rank(m);
}
inline std::size_t field_rank(const Matrix<Complex>& m, double tol) { return rank(m, tol); }

template <class F>
Matrix<F> field_kernel(const Matrix<F>& m, double) {
  return kernel_basis(m);
}
inline Matrix<Complex> field_kernel(const Matrix<Complex>& m, double tol) { return kernel_basis(m, tol); }

}  // namespace detail

template <class F>
Span<F> identity_span(std::size_t n) {
  auto id = Matrix<F>::identity(n, F(0), F(1));
  return {id, id};
}

/// Pullback composition: mid = ker [right1 | -left2].
template <class F>
Span<F> compose_spans(const Span<F>& s1, const Span<F>& s2, double tol = kDefaultRankTolerance) {
  if (s1.tgt_dim() != s2.src_dim()) throw DimensionMismatch("span composition: target and source dimensions differ");
  const std::size_t m1 = s1.mid_dim();
  const std::size_t m2 = s2.mid_dim();
  Matrix<F> neg(s2.left.rows(), m2, F(0));
  for (std::size_t i = 0; i < neg.rows(); ++i)
    for (std::size_t j = 0; j < m2; ++j) neg(i, j) = F(0) - s2.left(i, j);
  const auto k = detail::field_kernel(hstack(s1.right, neg, F(0)), tol);
  const auto top = k.block(0, m1, 0, k.cols());
  const auto bottom = k.block(m1, m1 + m2, 0, k.cols());
  return {s1.left * top, s2.right * bottom};
}

template <class F>
Span<F> tensor_spans(const Span<F>& s1, const Span<F>& s2) {
  return {direct_sum(s1.left, s2.left, F(0)), direct_sum(s1.right, s2.right, F(0))};
}

/// Equal mid dimensions and equal images of the stacked maps mid -> src (+) tgt.
template <class F>
bool spans_equivalent(const Span<F>& a, const Span<F>& b, double tol = kDefaultRankTolerance) {
  if (a.src_dim() != b.src_dim() || a.tgt_dim() != b.tgt_dim())
    throw DimensionMismatch("span equivalence: boundary dimensions differ");
  if (a.mid_dim() != b.mid_dim()) return false;
  const auto sa = vstack(a.left, a.right, F(0));
  const auto sb = vstack(b.left, b.right, F(0));
  const auto ra = detail::field_rank(sa, tol);
  const auto rb = detail::field_rank(sb, tol);
  return ra == rb && detail::field_rank(hstack(sa, sb, F(0)), tol) == ra;
}

}  // namespace alexkit
