#pragma once

#include <string>

#include "alexkit/laurent.hpp"

namespace alexkit {

/// Element of the fraction field Q(t).
///
/// Canonical form: numerator and denominator coprime, denominator has
/// minimum exponent 0 and constant term 1. Canonical form makes structural
/// equality coincide with field equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const LaurentPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : num_(c), den_(1) {}                // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly numerator, LaurentPoly denominator);

  const LaurentPoly& numerator() const noexcept { return num_; }
  const LaurentPoly& denominator() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_ == LaurentPoly(1); }

  std::string to_string() const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  struct Canonical {};
  RationalFunction(LaurentPoly numerator, LaurentPoly denominator, Canonical)
      : num_(std::move(numerator)), den_(std::move(denominator)) {}
  void canonicalize();

  LaurentPoly num_;
  LaurentPoly den_;
};

}  // namespace alexkit
