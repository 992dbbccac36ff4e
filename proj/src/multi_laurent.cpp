#include "alexkit/multi_laurent.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <sstream>

#include "alexkit/errors.hpp"

namespace alexkit {

MultiLaurentPoly::MultiLaurentPoly(std::size_t variable_count, const Rational& constant)
    : vars_(variable_count) {
  add_term(Exponents(variable_count, 0), constant);
}

MultiLaurentPoly MultiLaurentPoly::monomial(std::size_t variable_count, const Rational& c, Exponents e) {
  assert(e.size() == variable_count);
  MultiLaurentPoly p(variable_count);
  p.add_term(e, c);
  return p;
}

MultiLaurentPoly MultiLaurentPoly::variable(std::size_t variable_count, std::size_t index, std::int64_t power) {
  Exponents e(variable_count, 0);
  e.at(index) = power;
  return monomial(variable_count, Rational(1), std::move(e));
}

MultiLaurentPoly MultiLaurentPoly::from_univariate(const LaurentPoly& p) {
  MultiLaurentPoly q(1);
  for (const auto& [e, c] : p.terms()) q.terms_.emplace(Exponents{e}, c);
  return q;
}

void MultiLaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiLaurentPoly::is_constant() const noexcept {
  if (terms_.empty()) return true;
  if (terms_.size() != 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
}

std::int64_t MultiLaurentPoly::min_exponent(std::size_t index) const {
  if (is_zero()) throw ZeroPolynomial();
  std::int64_t m = terms_.begin()->first[index];
  for (const auto& term : terms_) m = std::min(m, term.first[index]);
  return m;
}

std::int64_t MultiLaurentPoly::max_exponent(std::size_t index) const {
  if (is_zero()) throw ZeroPolynomial();
  std::int64_t m = terms_.begin()->first[index];
  for (const auto& term : terms_) m = std::max(m, term.first[index]);
  return m;
}

MultiLaurentPoly MultiLaurentPoly::shifted(const Exponents& shift) const {
  MultiLaurentPoly p(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t k = 0; k < vars_; ++k) f[k] += shift[k];
    p.terms_.emplace(std::move(f), c);
  }
  return p;
}

MultiLaurentPoly MultiLaurentPoly::monomial_inverse() const {
  if (!is_monomial()) throw NotDivisible();
  const auto& [e, c] = *terms_.begin();
  Exponents f = e;
  for (auto& x : f) x = -x;
  return monomial(vars_, Rational(1) / c, std::move(f));
}

LaurentPoly MultiLaurentPoly::to_univariate() const {
  if (vars_ != 1) throw UseMultivariableRoute();
  return collapse();
}

LaurentPoly MultiLaurentPoly::collapse() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) {
    std::int64_t total = 0;
    for (auto x : e) total += x;
    p += LaurentPoly::monomial(c, total);
  }
  return p;
}

std::string MultiLaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    Rational mag = abs(c);
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      std::string f = "t" + std::to_string(k + 1);
      if (e[k] != 1) f += "^" + std::to_string(e[k]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

MultiLaurentPoly& MultiLaurentPoly::operator+=(const MultiLaurentPoly& o) {
  assert(o.vars_ == vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiLaurentPoly& MultiLaurentPoly::operator-=(const MultiLaurentPoly& o) {
  assert(o.vars_ == vars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiLaurentPoly operator*(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
  assert(a.vars_ == b.vars_);
  MultiLaurentPoly p(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < a.vars_; ++k) e[k] = ea[k] + eb[k];
      p.add_term(e, ca * cb);
    }
  return p;
}

MultiLaurentPoly operator*(MultiLaurentPoly a, const Rational& c) {
  if (c == 0) return MultiLaurentPoly(a.vars_);
  for (auto& term : a.terms_) term.second *= c;
  return a;
}

MultiLaurentPoly MultiLaurentPoly::operator-() const { return *this * Rational(-1); }

MultiLaurentPoly divide_exact(const MultiLaurentPoly& a, const MultiLaurentPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  const std::size_t s = a.variable_count();
  MultiLaurentPoly q(s);
  if (a.is_zero()) return q;
  // The quotient's exponents live in the box [min_a - min_b, max_a - max_b].
  Exponents lo(s), hi(s);
  for (std::size_t k = 0; k < s; ++k) {
    lo[k] = a.min_exponent(k) - b.min_exponent(k);
    hi[k] = a.max_exponent(k) - b.max_exponent(k);
    if (lo[k] > hi[k]) throw NotDivisible();
  }
  const auto& [lead_e, lead_c] = *b.terms().rbegin();
  MultiLaurentPoly r = a;
  while (!r.is_zero()) {
    const auto& [re, rc] = *r.terms().rbegin();
    Exponents e(s);
    for (std::size_t k = 0; k < s; ++k) {
      e[k] = re[k] - lead_e[k];
      if (e[k] < lo[k] || e[k] > hi[k]) throw NotDivisible();
    }
    auto m = MultiLaurentPoly::monomial(s, rc / lead_c, e);
    q += m;
    r -= m * b;
  }
  return q;
}

MultiLaurentPoly normalize_multi(const MultiLaurentPoly& p) {
  if (p.is_zero()) return p;
  const std::size_t s = p.variable_count();
  Exponents shift(s);
  for (std::size_t k = 0; k < s; ++k) shift[k] = -p.min_exponent(k);
  MultiLaurentPoly q = p.shifted(shift);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : q.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (q.terms().rbegin()->second < 0) scale = -scale;
  return q * scale;
}

namespace {

using Poly = MultiLaurentPoly;

// Highest variable index with a nonzero exponent in either polynomial.
std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
  std::optional<std::size_t> v;
  for (const Poly* p : {&a, &b})
    for (const auto& term : p->terms())
      for (std::size_t k = 0; k < term.first.size(); ++k)
        if (term.first[k] != 0 && (!v || k > *v)) v = k;
  return v;
}

// Coefficients of p as a polynomial in variable v (nonnegative exponents).
std::map<std::int64_t, Poly> coefficients_in(const Poly& p, std::size_t v) {
  std::map<std::int64_t, Poly> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] = 0;
    auto [it, inserted] = out.try_emplace(e[v], Poly(p.variable_count()));
    it->second.add_term(f, c);
  }
  return out;
}

Poly gcd_pair(const Poly& a, const Poly& b);

Poly content_in(const Poly& p, std::size_t v) {
  Poly g(p.variable_count());
  for (const auto& [d, c] : coefficients_in(p, v)) {
    g = gcd_pair(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Poly primitive_part(const Poly& p, std::size_t v) { return normalize_multi(divide_exact(p, content_in(p, v))); }

Poly pseudo_remainder(const Poly& a, const Poly& b, std::size_t v) {
  const std::size_t s = a.variable_count();
  const auto bc = coefficients_in(b, v);
  const auto db = bc.rbegin()->first;
  const Poly& lcb = bc.rbegin()->second;
  Poly r = a;
  while (!r.is_zero()) {
    auto rc = coefficients_in(r, v);
    const auto dr = rc.rbegin()->first;
    if (dr < db) break;
    r = lcb * r - rc.rbegin()->second * Poly::variable(s, v, dr - db) * b;
  }
  return r;
}

// Both inputs have nonnegative exponents.
Poly gcd_pair(const Poly& a, const Poly& b) {
  const std::size_t s = a.variable_count();
  if (a.is_zero()) return normalize_multi(b);
  if (b.is_zero()) return normalize_multi(a);
  auto v = main_variable(a, b);
  if (!v) return Poly(s, Rational(1));
  Poly ca = content_in(a, *v);
  Poly cb = content_in(b, *v);
  Poly c = gcd_pair(ca, cb);
  Poly p = normalize_multi(divide_exact(a, ca));
  Poly q = normalize_multi(divide_exact(b, cb));
  if (coefficients_in(p, *v).rbegin()->first < coefficients_in(q, *v).rbegin()->first) std::swap(p, q);
  while (!q.is_zero()) {
    if (coefficients_in(q, *v).rbegin()->first == 0) {
      p = Poly(s, Rational(1));
      break;
    }
    Poly r = pseudo_remainder(p, q, *v);
    p = std::move(q);
    q = r.is_zero() ? r : primitive_part(r, *v);
  }
  return normalize_multi(c * p);
}

}  // namespace

MultiLaurentPoly gcd_multivariate(const std::vector<MultiLaurentPoly>& polys) {
  if (polys.empty()) throw ValidationError("gcd of an empty list");
  const std::size_t s = polys.front().variable_count();
  Poly g(s);
  for (const auto& p : polys) {
    g = gcd_pair(g, normalize_multi(p));
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

}  // namespace alexkit
