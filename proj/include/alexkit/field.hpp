#pragma once

#include <complex>
#include <string>
#include <variant>

#include "alexkit/laurent.hpp"
#include "alexkit/rational.hpp"
#include "alexkit/rational_function.hpp"

namespace alexkit {

using Complex = std::complex<double>;

/// Rank decisions over Complex treat singular values below this fraction of
/// max(1, largest singular value) as zero.
inline constexpr double kDefaultRankTolerance = 1e-9;

struct GenericT {};
struct FixedRational {
  Rational t;
};
struct FixedComplex {
  Complex t;
};

/// Where the parameter t lives: the rational-function field Q(t), or a
/// fixed nonzero rational or complex value.
using ScalarField = std::variant<GenericT, FixedRational, FixedComplex>;

/// Throws NotAUnit for t = 0.
ScalarField fixed_rational(const Rational& t);
ScalarField fixed_complex(Complex t);
std::string describe(const ScalarField& field);

/// Embeds Laurent polynomials into a concrete scalar type.
class RationalPoint {
 public:
  using Scalar = Rational;
  explicit RationalPoint(Rational t);
  Scalar operator()(const LaurentPoly& p) const { return p.evaluate(t_); }
  const Rational& t() const noexcept { return t_; }

 private:
  Rational t_;
};

class ComplexPoint {
 public:
  using Scalar = Complex;
  explicit ComplexPoint(Complex t, double rank_tolerance = kDefaultRankTolerance);
  Scalar operator()(const LaurentPoly& p) const { return p.evaluate(t_); }
  Complex t() const noexcept { return t_; }
  double rank_tolerance() const noexcept { return tol_; }

 private:
  Complex t_;
  double tol_;
};

class GenericPoint {
 public:
  using Scalar = RationalFunction;
  Scalar operator()(const LaurentPoly& p) const { return RationalFunction(p); }
};

inline bool is_zero_scalar(const Rational& x) { return x == 0; }
inline bool is_zero_scalar(const RationalFunction& x) { return x.is_zero(); }

}  // namespace alexkit
