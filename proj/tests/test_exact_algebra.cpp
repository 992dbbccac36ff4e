#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexkit/errors.hpp"
#include "alexkit/field.hpp"
#include "alexkit/laurent.hpp"
#include "alexkit/linalg.hpp"
#include "alexkit/multi_laurent.hpp"
#include "alexkit/rational_function.hpp"
#include "alexkit/smith.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace alexkit;

namespace {

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one(1);

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, Rational>> terms) { return LaurentPoly(terms); }

}  // namespace

TEST_CASE("arith examples") {
  CHECK(arith(t + one, t - one, ArithOp::Mul) == poly({{2, 1}, {0, -1}}));
  const LaurentPoly p = poly({{-2, 3}, {1, -1}});
  CHECK(arith(p, LaurentPoly(), ArithOp::Add) == p);
  CHECK(arith(LaurentPoly::t(-1), t, ArithOp::Mul) == one);
  CHECK(arith(p, p, ArithOp::Sub).is_zero());
}

TEST_CASE("normalize_unit examples") {
  CHECK(normalize_unit(poly({{-1, -1}, {0, 1}, {1, -1}})) == poly({{0, 1}, {1, -1}, {2, 1}}));
  CHECK(normalize_unit(one) == one);
  CHECK(normalize_unit(LaurentPoly::monomial(5, 3)) == LaurentPoly(5));
  CHECK_THROWS_AS(normalize_unit(LaurentPoly()), ZeroPolynomial);
}

TEST_CASE("gcd examples") {
  // gcd(t^2 - 1, t^2 - t) = t - 1, represented with a positive constant term.
  const auto g = gcd_laurent(t * t - one, t * t - t);
  CHECK(g == one - t);
  CHECK(associated(g, t - one));
  const LaurentPoly p = poly({{0, 2}, {1, -4}, {3, 6}});
  CHECK(gcd_laurent(p, LaurentPoly()) == normalize_associate(p));
  CHECK(gcd_laurent(t * t - t + one, t - one) == one);
  CHECK(gcd_laurent(LaurentPoly(), LaurentPoly()).is_zero());
}

TEST_CASE("distinct_root_count examples") {
  CHECK(distinct_root_count(t * t - LaurentPoly(2) * t + one) == 1);
  CHECK(distinct_root_count(t * t - t + one) == 2);
  CHECK(distinct_root_count(one) == 0);
  CHECK(distinct_root_count(LaurentPoly::t(-3) * (t - one) * (t - one) * (t + one)) == 2);
  CHECK_THROWS_AS(distinct_root_count(LaurentPoly()), ZeroPolynomial);
}

TEST_CASE("evaluate examples") {
  const LaurentPoly trefoil = t * t - t + one;
  CHECK(trefoil.evaluate(Rational(-1)) == 3);
  const LaurentPoly p = poly({{-2, 3}, {0, 5}, {4, -1}});
  CHECK(p.evaluate(Rational(1)) == 7);
  CHECK(LaurentPoly::t(-1).evaluate(make_rational(1, 2)) == 2);
  CHECK_THROWS_AS(trefoil.evaluate(Rational(0)), NotAUnit);
  CHECK_THROWS_AS(trefoil.evaluate(Complex(0, 0)), NotAUnit);
  const Complex w(0.5, std::sqrt(3.0) / 2);
  CHECK(std::abs(trefoil.evaluate(w)) < 1e-12);
}

TEST_CASE("rendering") {
  CHECK((t * t - t + one).to_string() == "1 - t + t^2");
  CHECK((t * t - t + one).to_string(TermOrder::Descending) == "t^2 - t + 1");
  CHECK(poly({{-1, make_rational(-3, 2)}, {2, 4}}).to_string() == "-3/2*t^-1 + 4*t^2");
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("divmod and exact division") {
  const LaurentPoly a = t * t * t - one;
  auto [q, r] = divmod(a, t - one);
  CHECK(r.is_zero());
  CHECK(q == t * t + t + one);
  CHECK(divide_exact(LaurentPoly::t(-2) * (t * t - one), t + one) == LaurentPoly::t(-2) * (t - one));
  CHECK_THROWS_AS(divide_exact(t * t + one, t - one), NotDivisible);
  CHECK(divides(t - one, a));
  CHECK_FALSE(divides(t + one, a));
}

TEST_CASE("smith normal form examples") {
  Matrix<LaurentPoly> trefoil{{LaurentPoly(-1), one - t, t}, {t, LaurentPoly(-1), one - t}};
  const auto f = smith_normal_form(trefoil);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == one);
  CHECK(f[1] == one - t + t * t);
  CHECK(smith_normal_form(Matrix<LaurentPoly>::identity(2, LaurentPoly(), one)) == std::vector<LaurentPoly>{one, one});
  CHECK(smith_normal_form(Matrix<LaurentPoly>(2, 3, LaurentPoly())).empty());
  CHECK(smith_normal_form(Matrix<LaurentPoly>(0, 3, LaurentPoly())).empty());
  // diag(t - 1, t + 1) has factors 1, t^2 - 1.
  Matrix<LaurentPoly> d{{t - one, LaurentPoly()}, {LaurentPoly(), t + one}};
  CHECK(smith_normal_form(d) == std::vector<LaurentPoly>{one, normalize_associate(t * t - one)});
}

TEST_CASE("multivariate gcd examples") {
  const auto t1 = MultiLaurentPoly::variable(2, 0);
  const auto t2 = MultiLaurentPoly::variable(2, 1);
  const MultiLaurentPoly m1(2, Rational(1));
  CHECK(gcd_multivariate({t1 * t2 - t2, t2 * t2 - t2}) == m1);
  const auto p = (t1 - m1) * (t2 + m1) * Rational(3);
  CHECK(gcd_multivariate({p}) == normalize_multi(p));
  CHECK(gcd_multivariate({MultiLaurentPoly(2), p}) == normalize_multi(p));
  CHECK(gcd_multivariate({MultiLaurentPoly(2), MultiLaurentPoly(2)}).is_zero());
  CHECK(gcd_multivariate({p * t1, (t1 - m1) * (t1 + t2)}) == normalize_multi(t1 - m1));
  CHECK_THROWS_AS(gcd_multivariate({}), ValidationError);
}

TEST_CASE("multivariate arithmetic") {
  const auto t1 = MultiLaurentPoly::variable(2, 0);
  const auto t2 = MultiLaurentPoly::variable(2, 1);
  const MultiLaurentPoly m1(2, Rational(1));
  const auto a = (t1 - t2) * (t1 + m1);
  CHECK(divide_exact(a, t1 + m1) == t1 - t2);
  CHECK_THROWS_AS(divide_exact(a, t2 + m1), NotDivisible);
  CHECK((t1 * t2.monomial_inverse() * t2) == t1);
  CHECK(((t1 - m1) * t2).collapse() == t * t - t);
  CHECK_THROWS_AS(t1.to_univariate(), UseMultivariableRoute);
  CHECK((t1 * t2 - m1).to_string() == "-1 + t1*t2");
}

TEST_CASE("rational functions are canonical") {
  const RationalFunction a(t * t - one, t - one);
  CHECK(a.is_polynomial());
  CHECK(a == RationalFunction(t + one));
  const RationalFunction b(one, LaurentPoly::t(-1) * Rational(2) - Rational(2));
  const RationalFunction c(t * Rational(-1), (t - one) * Rational(2));
  CHECK(b == c);
  CHECK((b - c).is_zero());
  CHECK(RationalFunction(one) / RationalFunction(t) == RationalFunction(LaurentPoly::t(-1)));
  CHECK_THROWS_AS(RationalFunction(one) / RationalFunction(LaurentPoly()), ZeroPolynomial);
  CHECK_THROWS_AS(RationalFunction(one, LaurentPoly()), ZeroPolynomial);
}

TEST_CASE("fields reject t = 0") {
  CHECK_THROWS_AS(fixed_rational(Rational(0)), NotAUnit);
  CHECK_THROWS_AS(fixed_complex(Complex(0, 0)), NotAUnit);
  CHECK_THROWS_AS(RationalPoint(Rational(0)), NotAUnit);
  CHECK(describe(fixed_rational(make_rational(-2, 4))) == "-1/2");
}

TEST_CASE("exact rank and kernel") {
  Matrix<Rational> m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  const auto k = kernel_basis(m);
  REQUIRE(k.cols() == 1);
  const auto z = m * k;
  for (const auto& x : z.raw()) CHECK(x == 0);
  Matrix<Complex> c{{Complex(1, 0), Complex(0, 1)}, {Complex(0, 1), Complex(-1, 0)}};
  CHECK(rank(c) == 1);
  CHECK(kernel_basis(c).cols() == 1);
}

TEST_CASE("property: ring axioms") {
  gen::Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = gen::laurent(rng, -2, 3), b = gen::laurent(rng, -3, 2), c = gen::laurent(rng, 0, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("property: normalize_unit is idempotent and unit invariant") {
  gen::Rng rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = gen::nonzero_laurent(rng, -3, 3);
    const auto n = normalize_unit(p);
    CHECK(normalize_unit(n) == n);
    const LaurentPoly u = LaurentPoly::monomial(gen::chance(rng, 0.5) ? 1 : -1, gen::uniform(rng, -4, 4));
    CHECK(normalize_unit(u * p) == n);
    CHECK(n.min_exponent() == 0);
    CHECK(n.coefficient(0) > 0);
  }
}

TEST_CASE("property: gcd divides and is divisible by common divisors") {
  gen::Rng rng(103);
  for (int trial = 0; trial < 150; ++trial) {
    const auto common = gen::nonzero_laurent(rng, 0, 2);
    const auto a = common * gen::nonzero_laurent(rng, -1, 2);
    const auto b = common * gen::nonzero_laurent(rng, 0, 3);
    const auto g = gcd_laurent(a, b);
    CHECK(divides(g, a));
    CHECK(divides(g, b));
    CHECK(divides(common, g));
    CHECK(oracle::same_up_to_units(g, oracle::gcd(a, b)));
  }
}

TEST_CASE("property: evaluation is a ring homomorphism") {
  gen::Rng rng(104);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = gen::laurent(rng, -2, 3), q = gen::laurent(rng, -1, 2);
    const auto x = gen::nonzero_rational(rng);
    CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
    CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    const Complex z(std::uniform_real_distribution<double>(-2, 2)(rng), std::uniform_real_distribution<double>(-2, 2)(rng));
    if (std::abs(z) < 0.1) continue;
    const Complex lhs = (p * q).evaluate(z), rhs = p.evaluate(z) * q.evaluate(z);
    CHECK(std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("property: distinct roots agree with numeric roots") {
  gen::Rng rng(105);
  for (int trial = 0; trial < 60; ++trial) {
    // Products of small linear factors with known multiplicities.
    LaurentPoly p(1);
    std::vector<int> roots;
    const int factors = gen::uniform(rng, 1, 4);
    for (int k = 0; k < factors; ++k) {
      const int r = gen::uniform(rng, 1, 3) * (gen::chance(rng, 0.5) ? 1 : -1);
      roots.push_back(r);
      p *= t - LaurentPoly(r);
    }
    std::sort(roots.begin(), roots.end());
    const auto distinct = std::unique(roots.begin(), roots.end()) - roots.begin();
    CHECK(distinct_root_count(p * LaurentPoly::t(-2)) == distinct);
    for (const auto& z : complex_roots(p)) CHECK(std::abs(p.evaluate(z)) < 1e-6);
  }
}

TEST_CASE("property: smith normal form matches the minor oracle") {
  gen::Rng rng(106);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto m = gen::laurent_matrix(rng, rows, cols, 2);
    const auto f = smith_normal_form(m);
    for (std::size_t i = 0; i + 1 < f.size(); ++i) CHECK(divides(f[i], f[i + 1]));
    LaurentPoly product(1);
    for (std::size_t j = 1; j <= std::min(rows, cols); ++j) {
      const auto expected = oracle::minor_gcd(m, j);
      if (j <= f.size()) {
        product *= f[j - 1];
        CHECK(oracle::same_up_to_units(product, expected));
      } else {
        CHECK(expected.is_zero());
      }
    }
  }
}

TEST_CASE("property: multivariate gcd recovers planted factors") {
  gen::Rng rng(107);
  auto random_multi = [&](int vars) {
    MultiLaurentPoly p(static_cast<std::size_t>(vars));
    for (int k = 0; k < 3; ++k) {
      Exponents e;
      for (int v = 0; v < vars; ++v) e.push_back(gen::uniform(rng, 0, 2));
      p.add_term(e, Rational(gen::uniform(rng, -3, 3)));
    }
    return p;
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int vars = gen::uniform(rng, 2, 3);
    const auto f = random_multi(vars), g = random_multi(vars), h = random_multi(vars);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const auto d = gcd_multivariate({f * g, f * h});
    CHECK(divide_exact(f * g, d) * d == f * g);
    CHECK(divide_exact(f * h, d) * d == f * h);
    CHECK_NOTHROW(divide_exact(d, f));
  }
}
