#include "alexkit/burau.hpp"

#include <stdexcept>

#include "alexkit/errors.hpp"
#include "alexkit/linalg.hpp"

namespace alexkit {

BurauMatrix burau_generator(int strands, int letter) {
  const auto n = static_cast<std::size_t>(strands);
  if (letter == 0 || std::abs(letter) >= strands) throw ValidationError("braid letter out of range");
  auto m = BurauMatrix::identity(n, LaurentPoly(), LaurentPoly(1));
  const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
  const LaurentPoly one(1);
  if (letter > 0) {
    m(i, i) = one - LaurentPoly::t();
    m(i, i + 1) = LaurentPoly::t();
    m(i + 1, i) = one;
    m(i + 1, i + 1) = LaurentPoly();
  } else {
    m(i, i) = LaurentPoly();
    m(i, i + 1) = one;
    m(i + 1, i) = LaurentPoly::t(-1);
    m(i + 1, i + 1) = one - LaurentPoly::t(-1);
  }
  return m;
}

BurauMatrix burau_unreduced(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands);
  auto m = BurauMatrix::identity(n, LaurentPoly(), LaurentPoly(1));
  for (int letter : b.letters) m = m * burau_generator(b.strands, letter);
  return m;
}

Matrix<LaurentPoly> reduce_burau(const BurauMatrix& m) {
  const std::size_t n = m.rows();
  if (n < 2) throw EmptyMatrix();
  // D: consecutive differences; E: a section of D, x_k = y_k + ... + y_(n-1), x_n = 0.
  Matrix<LaurentPoly> d(n - 1, n, LaurentPoly());
  Matrix<LaurentPoly> e(n, n - 1, LaurentPoly());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    d(k, k) = LaurentPoly(1);
    d(k, k + 1) = LaurentPoly(-1);
    for (std::size_t l = k; l + 1 < n; ++l) e(k, l) = LaurentPoly(1);
  }
  return d * m * e;
}

Matrix<LaurentPoly> burau_reduced(const BraidWord& b) {
  if (b.strands < 2) throw EmptyMatrix();
  auto m = Matrix<LaurentPoly>::identity(static_cast<std::size_t>(b.strands - 1), LaurentPoly(), LaurentPoly(1));
  for (int letter : b.letters) m = m * reduce_burau(burau_generator(b.strands, letter));
  return m;
}

AnySpan span_trace_fix(const BurauMatrix& m, const ScalarField& field, double tol) {
  const std::size_t n = m.rows();
  const auto fixed = BurauMatrix::identity(n, LaurentPoly(), LaurentPoly(1)) - m;
  auto build = [&](auto point, double rank_tol) {
    using F = typename decltype(point)::Scalar;
    const auto k = detail::field_kernel(fixed.map([&](const LaurentPoly& p) { return point(p); }), rank_tol);
    return AnySpan(Span<F>{Matrix<F>(0, k.cols(), F(0)), Matrix<F>(0, k.cols(), F(0))});
  };
  struct Visitor {
    decltype(build)& b;
    double tol;
    AnySpan operator()(const GenericT&) const { return b(GenericPoint{}, tol); }
    AnySpan operator()(const FixedRational& f) const { return b(RationalPoint(f.t), tol); }
    AnySpan operator()(const FixedComplex& f) const { return b(ComplexPoint(f.t, tol), tol); }
  };
  return std::visit(Visitor{build, tol}, field);
}

namespace {

LaurentPoly normalized_or_zero(const LaurentPoly& p) { return p.is_zero() ? p : normalize_unit(p); }

}  // namespace

LaurentPoly closure_alexander_reduced(const BraidWord& b) {
  const auto red = burau_reduced(b);
  const std::size_t n = red.rows();
  const auto det = determinant(Matrix<LaurentPoly>::identity(n, LaurentPoly(), LaurentPoly(1)) - red, LaurentPoly(1));
  const LaurentPoly numerator = det * (LaurentPoly(1) - LaurentPoly::t());
  const LaurentPoly denominator = LaurentPoly(1) - LaurentPoly::t(static_cast<std::int64_t>(b.strands));
  return normalized_or_zero(divide_exact(numerator, denominator));
}

LaurentPoly closure_alexander(const BraidWord& b, std::size_t row, std::size_t col) {
  const auto n = static_cast<std::size_t>(b.strands);
  if (row >= n || col >= n) throw DimensionMismatch("deleted row or column out of range");
  const auto fixed = BurauMatrix::identity(n, LaurentPoly(), LaurentPoly(1)) - burau_unreduced(b);
  const auto delta = normalized_or_zero(determinant(fixed.minor_matrix(row, col), LaurentPoly(1)));
  if (row == 0 && col == 0 && n >= 2 && closure_component_count(b) == 1) {
    if (!associated(delta, closure_alexander_reduced(b)))
      throw std::logic_error("Burau minor and reduced formula disagree for " + render_braid(b));
  }
  return delta;
}

}  // namespace alexkit
