#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alexkit/rational.hpp"

namespace alexkit {

enum class TermOrder { Ascending, Descending };

/// Element of Q[t, t^-1]. Zero coefficients are never stored, so the zero
/// polynomial is the empty term map and structural equality is equality.
class LaurentPoly {
 public:
  using Terms = std::map<std::int64_t, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}   // NOLINT

  /// Builds from (exponent, coefficient) pairs; repeated exponents add up.
  LaurentPoly(std::initializer_list<std::pair<std::int64_t, Rational>> terms);

  static LaurentPoly monomial(const Rational& coefficient, std::int64_t exponent);
  static LaurentPoly t(std::int64_t exponent = 1) { return monomial(Rational(1), exponent); }
  static LaurentPoly from_terms(Terms terms);
  /// Ordinary polynomial sum_k coeffs[k] t^(k + shift).
  static LaurentPoly from_dense(const std::vector<Rational>& coeffs, std::int64_t shift = 0);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;

  std::int64_t min_exponent() const;
  std::int64_t max_exponent() const;
  /// max - min exponent: the Euclidean degree on Q[t, t^-1].
  std::int64_t spread() const;
  Rational coefficient(std::int64_t exponent) const;

  /// p * t^k
  LaurentPoly shifted(std::int64_t k) const;
  /// p(t^-1)
  LaurentPoly inverted() const;
  /// Dense coefficients of t^-min * p (an ordinary polynomial with nonzero constant term).
  std::vector<Rational> dense() const;

  Rational evaluate(const Rational& t) const;
  std::complex<double> evaluate(std::complex<double> t) const;

  std::string to_string(TermOrder order = TermOrder::Ascending, const std::string& var = "t") const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Rational& c);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Rational& c) { return a *= c; }
  friend LaurentPoly operator*(const Rational& c, LaurentPoly a) { return a *= c; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

 private:
  void add_term(std::int64_t exponent, const Rational& c);

  Terms terms_;
};

enum class ArithOp { Add, Sub, Mul };

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

/// u * p with u = +-t^k chosen so the minimum exponent is 0 and the constant
/// term is positive. Throws ZeroPolynomial on 0.
LaurentPoly normalize_unit(const LaurentPoly& p);

/// Representative of the associate class of p under the full unit group
/// Q^* t^Z: coprime integer coefficients, minimum exponent 0, positive
/// constant term. Zero maps to zero.
LaurentPoly normalize_associate(const LaurentPoly& p);

/// True when a and b differ by a unit c t^k with c in Q^*.
bool associated(const LaurentPoly& a, const LaurentPoly& b);

/// Division with remainder in the Euclidean domain Q[t, t^-1]:
/// a = q b + r with r = 0 or spread(r) < spread(b).
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a; throws NotDivisible otherwise.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& d, const LaurentPoly& a);

/// Normalized gcd (see normalize_associate). gcd(0, 0) = 0.
LaurentPoly gcd_laurent(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly gcd_laurent(const std::vector<LaurentPoly>& ps);

/// d/dt.
LaurentPoly derivative(const LaurentPoly& p);

/// Number of distinct roots in C^*. Throws ZeroPolynomial on 0.
int distinct_root_count(const LaurentPoly& p);

/// Numerical roots in C^* (with multiplicity) via a companion-matrix eigen solve.
std::vector<std::complex<double>> complex_roots(const LaurentPoly& p);

}  // namespace alexkit
