#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alexkit/laurent.hpp"
#include "alexkit/rational.hpp"

namespace alexkit {

using Exponents = std::vector<std::int64_t>;

/// Element of Q[t1^+-1, ..., ts^+-1]. Terms are keyed by exponent vectors in
/// lexicographic order; zero coefficients are never stored.
class MultiLaurentPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  explicit MultiLaurentPoly(std::size_t variable_count = 1) : vars_(variable_count) {}
  MultiLaurentPoly(std::size_t variable_count, const Rational& constant);

  static MultiLaurentPoly monomial(std::size_t variable_count, const Rational& c, Exponents e);
  /// The variable t_(index+1).
  static MultiLaurentPoly variable(std::size_t variable_count, std::size_t index, std::int64_t power = 1);
  static MultiLaurentPoly from_univariate(const LaurentPoly& p);

  std::size_t variable_count() const noexcept { return vars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept;

  /// Lowest exponent of variable `index` over all terms.
  std::int64_t min_exponent(std::size_t index) const;
  std::int64_t max_exponent(std::size_t index) const;
  /// Multiply by the monomial t^shift.
  MultiLaurentPoly shifted(const Exponents& shift) const;
  /// Inverse of a monomial; throws NotDivisible on non-monomials.
  MultiLaurentPoly monomial_inverse() const;
  /// Requires variable_count() == 1.
  LaurentPoly to_univariate() const;
  /// Sends every variable to t.
  LaurentPoly collapse() const;

  std::string to_string() const;

  MultiLaurentPoly& operator+=(const MultiLaurentPoly& o);
  MultiLaurentPoly& operator-=(const MultiLaurentPoly& o);
  friend MultiLaurentPoly operator+(MultiLaurentPoly a, const MultiLaurentPoly& b) { return a += b; }
  friend MultiLaurentPoly operator-(MultiLaurentPoly a, const MultiLaurentPoly& b) { return a -= b; }
  friend MultiLaurentPoly operator*(const MultiLaurentPoly& a, const MultiLaurentPoly& b);
  friend MultiLaurentPoly operator*(MultiLaurentPoly a, const Rational& c);
  MultiLaurentPoly operator-() const;
  friend bool operator==(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiLaurentPoly& a, const MultiLaurentPoly& b) { return !(a == b); }

  void add_term(const Exponents& e, const Rational& c);

 private:
  std::size_t vars_;
  Terms terms_;
};

/// Exact quotient a / b; throws NotDivisible when b does not divide a.
MultiLaurentPoly divide_exact(const MultiLaurentPoly& a, const MultiLaurentPoly& b);

/// Each variable's minimum exponent moved to 0, coefficients made coprime
/// integers, lexicographic leading coefficient positive. Zero maps to zero.
MultiLaurentPoly normalize_multi(const MultiLaurentPoly& p);

/// Normalized gcd in the UFD Q[t1^+-1..ts^+-1]; all-zero input gives 0.
MultiLaurentPoly gcd_multivariate(const std::vector<MultiLaurentPoly>& polys);

}  // namespace alexkit
