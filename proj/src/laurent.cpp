#include "alexkit/laurent.hpp"

#include <unsupported/Eigen/Polynomials>

#include <algorithm>
#include <sstream>

#include "alexkit/errors.hpp"

namespace alexkit {

namespace {

using Dense = std::vector<Rational>;

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Ordinary polynomial long division over Q; b must be nonzero.
std::pair<Dense, Dense> dense_divmod(Dense a, const Dense& b) {
  trim(a);
  if (a.size() < b.size()) return {Dense{}, a};
  Dense q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational c = a[k + b.size() - 1] / lead;
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= c * b[j];
  }
  a.resize(b.size() - 1);
  trim(a);
  trim(q);
  return {q, a};
}

Dense dense_gcd(Dense a, Dense b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = dense_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

void write_coefficient_term(std::ostringstream& out, const Rational& c, std::int64_t e,
                            const std::string& var, bool first) {
  const bool negative = c < 0;
  Rational mag = abs(c);
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  if (e == 0) {
    out << mag.get_str();
    return;
  }
  if (mag != 1) out << mag.get_str() << "*";
  out << var;
  if (e != 1) out << "^" << e;
}

}  // namespace

LaurentPoly::LaurentPoly(const Rational& constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& coefficient, std::int64_t exponent) {
  LaurentPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

LaurentPoly LaurentPoly::from_terms(Terms terms) {
  LaurentPoly p;
  for (auto& [e, c] : terms)
    if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_dense(const std::vector<Rational>& coeffs, std::int64_t shift) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) p.terms_.emplace(static_cast<std::int64_t>(k) + shift, coeffs[k]);
  return p;
}

void LaurentPoly::add_term(std::int64_t exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::int64_t LaurentPoly::min_exponent() const {
  if (is_zero()) throw ZeroPolynomial();
  return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exponent() const {
  if (is_zero()) throw ZeroPolynomial();
  return terms_.rbegin()->first;
}

std::int64_t LaurentPoly::spread() const { return max_exponent() - min_exponent(); }

Rational LaurentPoly::coefficient(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), e + k, c);
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

std::vector<Rational> LaurentPoly::dense() const {
  if (is_zero()) return {};
  const auto lo = min_exponent();
  std::vector<Rational> out(static_cast<std::size_t>(spread() + 1));
  for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - lo)] = c;
  return out;
}

Rational LaurentPoly::evaluate(const Rational& t) const {
  if (t == 0) throw NotAUnit();
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational power = 1;
    Rational base = e >= 0 ? t : Rational(1) / t;
    for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k) power *= base;
    acc += c * power;
  }
  return acc;
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> t) const {
  if (t == std::complex<double>(0.0, 0.0)) throw NotAUnit();
  if (is_zero()) return {0.0, 0.0};
  auto coeffs = dense();
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k].get_d();
  return acc * std::pow(t, static_cast<int>(min_exponent()));
}

std::string LaurentPoly::to_string(TermOrder order, const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  auto emit = [&](const auto& term) {
    write_coefficient_term(out, term.second, term.first, var, first);
    first = false;
  };
  if (order == TermOrder::Ascending)
    std::for_each(terms_.begin(), terms_.end(), emit);
  else
    std::for_each(terms_.rbegin(), terms_.rend(), emit);
  return out.str();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
  return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& term : terms_) term.second *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& term : p.terms_) term.second = -term.second;
  return p;
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
  }
  return {};
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  LaurentPoly q = p.shifted(-p.min_exponent());
  if (q.coefficient(0) < 0) q = -q;
  return q;
}

LaurentPoly normalize_associate(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly q = normalize_unit(p);
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [e, c] : q.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return q * scale;
}

bool associated(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize_associate(a) == normalize_associate(b);
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  if (a.is_zero()) return {LaurentPoly{}, LaurentPoly{}};
  const auto ea = a.min_exponent();
  const auto eb = b.min_exponent();
  auto [q, r] = dense_divmod(a.dense(), b.dense());
  return {LaurentPoly::from_dense(q, ea - eb), LaurentPoly::from_dense(r, ea)};
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw NotDivisible();
  return q;
}

bool divides(const LaurentPoly& d, const LaurentPoly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

LaurentPoly gcd_laurent(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return normalize_associate(b);
  if (b.is_zero()) return normalize_associate(a);
  return normalize_associate(LaurentPoly::from_dense(dense_gcd(a.dense(), b.dense())));
}

LaurentPoly gcd_laurent(const std::vector<LaurentPoly>& ps) {
  LaurentPoly g;
  for (const auto& p : ps) {
    g = gcd_laurent(g, p);
    if (g == LaurentPoly(1)) break;
  }
  return g;
}

LaurentPoly derivative(const LaurentPoly& p) {
  LaurentPoly d;
  for (const auto& [e, c] : p.terms())
    if (e != 0) d += LaurentPoly::monomial(c * Rational(static_cast<long>(e)), e - 1);
  return d;
}

int distinct_root_count(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  auto q = normalize_unit(p);
  if (q.spread() == 0) return 0;
  auto g = gcd_laurent(q, derivative(q));
  return static_cast<int>(q.spread() - g.spread());
}

std::vector<std::complex<double>> complex_roots(const LaurentPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  auto coeffs = p.dense();
  if (coeffs.size() < 2) return {};
  Eigen::VectorXd c(static_cast<Eigen::Index>(coeffs.size()));
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[static_cast<Eigen::Index>(k)] = coeffs[k].get_d();
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(c);
  std::vector<std::complex<double>> roots;
  for (const auto& r : solver.roots()) roots.push_back(r);
  return roots;
}

}  // namespace alexkit
