#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace alexkit {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace alexkit
