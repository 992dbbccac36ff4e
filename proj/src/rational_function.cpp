#include "alexkit/rational_function.hpp"

#include "alexkit/errors.hpp"

namespace alexkit {

RationalFunction::RationalFunction(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw ZeroPolynomial();
  canonicalize();
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_monomial()) {
    auto g = gcd_laurent(num_, den_);
    if (g != LaurentPoly(1)) {
      num_ = divide_exact(num_, g);
      den_ = divide_exact(den_, g);
    }
  }
  const auto shift = den_.min_exponent();
  const Rational scale = Rational(1) / den_.coefficient(shift);
  num_ = num_.shifted(-shift) * scale;
  den_ = den_.shifted(-shift) * scale;
}

std::string RationalFunction::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(a.num_ + b.num_, LaurentPoly(1), RationalFunction::Canonical{});
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.is_polynomial() && b.is_polynomial())
    return RationalFunction(a.num_ * b.num_, LaurentPoly(1), RationalFunction::Canonical{});
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Canonical{});
}

}  // namespace alexkit
