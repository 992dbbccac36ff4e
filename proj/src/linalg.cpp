#include "alexkit/linalg.hpp"

#include <algorithm>

#include <Eigen/SVD>

#include <sstream>

namespace alexkit {

namespace {

Eigen::MatrixXcd to_eigen(const Matrix<Complex>& m) {
  Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
  return e;
}

std::size_t numeric_rank(const Eigen::VectorXd& singular, double rel_tol) {
  if (singular.size() == 0) return 0;
  // Entries are evaluations of integer polynomials, so a matrix made only of
  // round-off is zero rather than of full rank.
  const double cutoff = rel_tol * std::max(1.0, singular[0]);
  std::size_t r = 0;
  for (Eigen::Index k = 0; k < singular.size(); ++k)
    if (singular[k] > cutoff) ++r;
  return r;
}

}  // namespace

std::size_t rank(const Matrix<Complex>& m, double rel_tol) {
  if (m.empty()) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
  return numeric_rank(svd.singularValues(), rel_tol);
}

Matrix<Complex> kernel_basis(const Matrix<Complex>& m, double rel_tol) {
  const std::size_t n = m.cols();
  if (m.rows() == 0 || n == 0) return Matrix<Complex>::identity(n, Complex(0), Complex(1));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m), Eigen::ComputeFullV);
  const std::size_t r = numeric_rank(svd.singularValues(), rel_tol);
  const auto& v = svd.matrixV();
  Matrix<Complex> k(n, n - r, Complex(0));
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - r) = v(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return k;
}

ScalarField fixed_rational(const Rational& t) {
  if (t == 0) throw NotAUnit();
  return FixedRational{t};
}

ScalarField fixed_complex(Complex t) {
  if (t == Complex(0.0, 0.0)) throw NotAUnit();
  return FixedComplex{t};
}

std::string describe(const ScalarField& field) {
  struct Visitor {
    std::string operator()(const GenericT&) const { return "generic"; }
    std::string operator()(const FixedRational& f) const { return f.t.get_str(); }
    std::string operator()(const FixedComplex& f) const {
      std::ostringstream out;
      out.precision(17);
      out << f.t.real() << (f.t.imag() < 0 ? "-" : "+") << std::abs(f.t.imag()) << "i";
      return out.str();
    }
  };
  return std::visit(Visitor{}, field);
}

RationalPoint::RationalPoint(Rational t) : t_(std::move(t)) {
  if (t_ == 0) throw NotAUnit();
}

ComplexPoint::ComplexPoint(Complex t, double rank_tolerance) : t_(t), tol_(rank_tolerance) {
  if (t_ == Complex(0.0, 0.0)) throw NotAUnit();
}

}  // namespace alexkit
