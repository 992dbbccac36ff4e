// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "alexkit/alexander.hpp"
#include "alexkit/burau.hpp"
#include "alexkit/fox.hpp"
#include "alexkit/knot_codes.hpp"
#include "alexkit/smith.hpp"
#include "alexkit/tangle.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace alexkit;

namespace {

// Pinned tolerances.
constexpr double kRootRankTolerance = 1e-6;

const LaurentPoly t = LaurentPoly::t();
const LaurentPoly one(1);
const LaurentPoly zero;

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool ok, const std::function<std::string()>& message) {
    ++count_;
    if (ok) return;
    ++failed_;
    if (messages_.size() < 3) messages_.push_back(message());
  }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << count_ << " checks";
    if (failed_) {
      s << ", " << failed_ << " failed";
      for (const auto& m : messages_) s << "; " << m;
    }
    return s.str();
  }

 private:
  std::size_t count_ = 0, failed_ = 0;
  std::vector<std::string> messages_;
};

std::string show(const LaurentPoly& p) { return p.to_string(TermOrder::Descending); }

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  BraidWord r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord r{b.strands, {}};
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

Matrix<LaurentPoly> id_minus(const Matrix<LaurentPoly>& m) {
  auto r = Matrix<LaurentPoly>::identity(m.rows(), zero, one);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) -= m(i, j);
  return r;
}

LaurentPoly fox_delta(const CrossingList& d) { return alexander_data(alexander_matrix(d)).delta(); }

// Three-route check of a knot given by crossing list and braid.
void three_routes(Check& c, const CrossingList& code, const BraidWord& b, const LaurentPoly& expected) {
  const auto fox = fox_delta(code);
  c.expect(fox == expected, [&] { return "Fox route gave " + show(fox); });
  const auto burau = closure_alexander(b);
  c.expect(burau == expected, [&] { return "Burau route gave " + show(burau); });
  const auto closed = braid_closure_tangle(b);
  const auto dsl = closed_tangle_alexander(closed);
  c.expect(dsl == expected, [&] { return "tangle route gave " + show(dsl); });
  // The mid space jumps exactly at the roots of the polynomial.
  const auto generic = evaluate_tangle(closed, GenericPoint{}).mid_dim();
  c.expect(generic == 1, [&] { return "generic mid dimension " + std::to_string(generic); });
  for (const auto& z : complex_roots(expected)) {
    const auto dim = evaluate_tangle(closed, ComplexPoint(z, kRootRankTolerance)).mid_dim();
    c.expect(dim == 2, [&] { return "mid dimension " + std::to_string(dim) + " at a root"; });
  }
}

std::string criterion_1() {
  Check c;
  three_routes(c, catalog_lookup("trefoil").crossings, parse_braid("2: s1 s1 s1"), one - t + t * t);
  return c.ok() ? "" : c.summary();
}

std::string criterion_2() {
  Check c;
  three_routes(c, catalog_lookup("figure8").crossings, parse_braid("3: s1 S2 s1 S2"), one - LaurentPoly(3) * t + t * t);
  const auto pd = fox_delta(parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"));
  c.expect(pd == one - LaurentPoly(3) * t + t * t, [&] { return "PD route gave " + show(pd); });
  return c.ok() ? "" : c.summary();
}

std::string criterion_3() {
  Check c;
  const auto m = alexander_matrix(catalog_lookup("trefoil").crossings);
  const auto delta = alexander_data(m).delta();
  gen::Rng rng(3);
  int sampled = 0;
  while (sampled < 20) {
    const auto x = gen::nonzero_rational(rng, 50);
    if (delta.evaluate(x) == 0) continue;
    ++sampled;
    const int dim = fibre_dimension(m, RationalPoint(x));
    c.expect(dim == 1, [&] { return "fibre " + std::to_string(dim) + " at t = " + x.get_str(); });
  }
  const auto roots = complex_roots(delta);
  c.expect(roots.size() == 2, [&] { return std::to_string(roots.size()) + " roots found"; });
  for (const auto& z : roots) {
    const int dim = fibre_dimension(m, ComplexPoint(z, kRootRankTolerance));
    c.expect(dim == 2, [&] { return "fibre " + std::to_string(dim) + " at a root"; });
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_4() {
  Check c;
  const auto w = reduce_word({{1, 1}, {1, 1}, {2, 1}, {1, -1}});
  const auto weights = AbelianWeights::uniform(2);
  const auto tm = MultiLaurentPoly::variable(1, 0);
  const MultiLaurentPoly m1(1, Rational(1));
  const auto d1 = fox_derivative_abelianized(w, 1, weights);
  const auto d2 = fox_derivative_abelianized(w, 2, weights);
  c.expect(d1 == m1 + tm - tm * tm, [&] { return "d/dx1 = " + d1.to_string(); });
  c.expect(d2 == tm * tm, [&] { return "d/dx2 = " + d2.to_string(); });
  return c.ok() ? "" : c.summary();
}

std::string criterion_5() {
  Check c;
  const Matrix<LaurentPoly> block{{one - t, t}, {one, zero}};
  c.expect(burau_unreduced(parse_braid("2: s1")) == block, [] { return "generator block differs"; });
  gen::Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = gen::uniform(rng, 3, 5);
    const auto w = gen::braid(rng, n, n, 6);
    const int i = gen::uniform(rng, 1, n - 2);
    const int s = gen::chance(rng, 0.5) ? 1 : -1;
    const BraidWord lhs{n, {s * i, s * (i + 1), s * i}}, rhs{n, {s * (i + 1), s * i, s * (i + 1)}};
    c.expect(burau_unreduced(concat(w, lhs)) == burau_unreduced(concat(w, rhs)),
             [&] { return "braid relation fails after " + render_braid(w); });
    if (n >= 4) {
      const int j = gen::uniform(rng, 1, n - 3);
      const int k = gen::uniform(rng, j + 2, n - 1);
      const BraidWord a{n, {j, k}}, b{n, {k, j}};
      c.expect(burau_unreduced(concat(w, a)) == burau_unreduced(concat(w, b)),
               [&] { return "far commutation fails after " + render_braid(w); });
    }
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_6() {
  Check c;
  gen::Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = gen::braid(rng, 1, 4, 8);
    const auto m = burau_unreduced(b);
    bool fixed = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      LaurentPoly sum;
      for (std::size_t j = 0; j < m.cols(); ++j) sum += m(i, j);
      fixed = fixed && sum == one;
    }
    c.expect(fixed, [&] { return "ones not fixed by " + render_braid(b); });
    const auto det = oracle::leibniz_det(id_minus(m), zero, one);
    c.expect(det.is_zero(), [&] { return "det(Id - B) = " + show(det) + " for " + render_braid(b); });
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_7() {
  Check c;
  gen::Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = gen::braid(rng, 2, 4, 8);
    const auto delta = closure_alexander(b);
    const auto g = gen::braid(rng, b.strands, b.strands, 4);
    const auto conj = closure_alexander(concat(concat(g, b), inverse(g)));
    c.expect(oracle::same_up_to_units(conj, delta), [&] { return "conjugation changes " + render_braid(b); });
    BraidWord stab = b;
    stab.strands += 1;
    stab.letters.push_back(gen::chance(rng, 0.5) ? b.strands : -b.strands);
    const auto st = closure_alexander(stab);
    c.expect(oracle::same_up_to_units(st, delta), [&] { return "stabilization changes " + render_braid(b); });
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_8() {
  Check c;
  gen::Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const auto b = gen::knot_braid(rng, 2, 4, 8);
    const auto minor = closure_alexander(b);
    const auto red = oracle::leibniz_det(id_minus(burau_reduced(b)), zero, one);
    const auto num = (one - t) * red;
    const auto den = one - LaurentPoly::t(b.strands);
    const auto r = oracle::remainder(oracle::to_dense(num), oracle::to_dense(den));
    c.expect(r.empty(), [&] { return "inexact division for " + render_braid(b); });
    c.expect(oracle::same_up_to_units(num, den * minor), [&] { return "formulas differ for " + render_braid(b); });
    const auto library = closure_alexander_reduced(b);
    c.expect(library == minor, [&] { return "reduced route gave " + show(library) + " for " + render_braid(b); });
  }
  return c.ok() ? "" : c.summary();
}

template <class Point>
bool equiv(std::string_view a, std::string_view b, const Point& p) {
  return spans_equivalent(evaluate_tangle(parse_tangle(a), p), evaluate_tangle(parse_tangle(b), p));
}

template <class Point>
void tangle_laws(Check& c, gen::Rng& rng, const Point& p, const std::string& where) {
  static const std::vector<std::pair<const char*, const char*>> identities = {
      {"xp ; xm", "id+ # id+"},
      {"xm ; xp", "id+ # id+"},
      {"(xp # id+) ; (id+ # xp) ; (xp # id+)", "(id+ # xp) ; (xp # id+) ; (id+ # xp)"},
      {"(xm # id+) ; (id+ # xm) ; (xm # id+)", "(id+ # xm) ; (xm # id+) ; (id+ # xm)"},
      {"(coev+- # id+) ; (id+ # ev-+)", "id+"},
      {"(id+ # coev-+) ; (ev+- # id+)", "id+"},
      {"(coev-+ # id-) ; (id- # ev+-)", "id-"},
      {"(id- # coev+-) ; (ev-+ # id-)", "id-"},
  };
  for (const auto& [a, b] : identities)
    c.expect(equiv(a, b, p), [&] { return std::string(a) + " differs from " + b + " at " + where; });

  for (int trial = 0; trial < 100; ++trial) {
    const auto e = gen::tangle(rng, 12);
    c.expect(spans_equivalent(evaluate_tangle(e, p), tangle_linear_system(e, p)),
             [&] { return "routes differ on " + e.to_string() + " at " + where; });
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = gen::tangle(rng, 6);
    const auto b = gen::tangle_from(rng, a.target(), 6);
    const auto d = gen::tangle(rng, 6);
    const auto composed = compose_spans(tangle_linear_system(a, p), tangle_linear_system(b, p));
    c.expect(spans_equivalent(evaluate_tangle(TangleExpr::compose(a, b), p), composed),
             [&] { return "functoriality fails on " + a.to_string() + " ; " + b.to_string() + " at " + where; });
    const auto tensored = tensor_spans(tangle_linear_system(a, p), tangle_linear_system(d, p));
    c.expect(spans_equivalent(evaluate_tangle(TangleExpr::tensor(a, d), p), tensored),
             [&] { return "monoidality fails on " + a.to_string() + " # " + d.to_string() + " at " + where; });
  }
}

std::string criterion_9() {
  Check c;
  gen::Rng rng(9);
  tangle_laws(c, rng, GenericPoint{}, "generic t");
  for (const Rational& x : {Rational(2), Rational(-1), Rational(1, 3), Rational(-5, 2), Rational(7, 4)})
    tangle_laws(c, rng, RationalPoint(x), "t = " + x.get_str());
  return c.ok() ? "" : c.summary();
}

std::string criterion_10() {
  Check c;
  const auto trefoil = smith_normal_form(alexander_matrix(catalog_lookup("trefoil").crossings).univariate());
  c.expect(trefoil == std::vector<LaurentPoly>{one, one - t + t * t}, [] { return "trefoil factors differ"; });
  auto chain = [&](const CrossingList& d, const std::string& name) {
    const auto data = alexander_data(alexander_matrix(d));
    for (std::size_t k = 0; k + 1 < data.delta_k.size(); ++k)
      c.expect(divides(data.delta_k[k + 1], data.delta_k[k]), [&] { return "chain breaks for " + name; });
  };
  for (const auto& e : catalog()) chain(e.crossings, e.name);
  gen::Rng rng(10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto b = gen::braid(rng, 1, 4, 8);
    chain(braid_closure(b), render_braid(b));
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto rows = static_cast<std::size_t>(gen::uniform(rng, 1, 4));
    const auto cols = static_cast<std::size_t>(gen::uniform(rng, 1, 5));
    const auto m = gen::laurent_matrix(rng, rows, cols, 2);
    const auto f = smith_normal_form(m);
    LaurentPoly product = one;
    for (std::size_t j = 1; j <= std::min(rows, cols); ++j) {
      const auto expected = oracle::minor_gcd(m, j);
      if (j <= f.size()) {
        product *= f[j - 1];
        c.expect(oracle::same_up_to_units(product, expected), [&] { return "factor product differs from minor gcd"; });
      } else {
        c.expect(expected.is_zero(), [&] { return "rank differs from minor oracle"; });
      }
    }
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_11() {
  Check c;
  for (const auto& [name, expected] : std::vector<std::pair<std::string, std::string>>{
           {"trefoil", "3*L^2 - 3*L"}, {"unknot", "L^2 - L"}, {"figure8", "3*L^2 - 3*L"}}) {
    const auto got = virtual_class(alexander_data(alexander_matrix(catalog_lookup(name).crossings))).to_string();
    c.expect(got == expected, [&] { return name + " gave " + got; });
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_12() {
  Check c;
  auto sane = [&](const CrossingList& d, const std::string& name) {
    const auto delta = fox_delta(d);
    const auto at_one = delta.evaluate(Rational(1));
    c.expect(at_one == 1 || at_one == -1, [&] { return name + ": Delta(1) = " + at_one.get_str(); });
    c.expect(normalize_unit(delta.inverted()) == delta, [&] { return name + ": not symmetric"; });
  };
  for (const auto& e : catalog())
    if (e.crossings.component_count() == 1) sane(e.crossings, e.name);
  gen::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const auto b = gen::knot_braid(rng, 1, 4, 8);
    sane(braid_closure(b), render_braid(b));
  }
  return c.ok() ? "" : c.summary();
}

std::string criterion_13() {
  Check c;
  const auto fox = fox_delta(parse_crossing_list("arcs 2"));
  c.expect(fox.is_zero(), [&] { return "Fox route gave " + show(fox); });
  const auto burau = closure_alexander(parse_braid("2:"));
  c.expect(burau.is_zero(), [&] { return "Burau route gave " + show(burau); });
  const auto unlink = parse_tangle("coev+- # coev+- ; ev+- # ev+-");
  const auto dsl = closed_tangle_alexander(unlink);
  c.expect(dsl.is_zero(), [&] { return "tangle route gave " + show(dsl); });
  const auto mid = evaluate_tangle(unlink, GenericPoint{}).mid_dim();
  c.expect(mid == 2, [&] { return "generic mid dimension " + std::to_string(mid); });
  const auto fibre = fibre_dimension(alexander_matrix(parse_crossing_list("arcs 2")), ScalarField{GenericT{}});
  c.expect(fibre == 2, [&] { return "generic fibre dimension " + std::to_string(fibre); });
  return c.ok() ? "" : c.summary();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<std::string()>>> criteria = {
      {"trefoil triple-route agreement", criterion_1},
      {"figure-eight triple-route agreement", criterion_2},
      {"fibre dimension off and on the roots", criterion_3},
      {"Fox derivative example", criterion_4},
      {"Burau generator block and braid relations", criterion_5},
      {"fixed line and vanishing determinant", criterion_6},
      {"Markov invariance", criterion_7},
      {"reduced Burau formula", criterion_8},
      {"tangle functor laws", criterion_9},
      {"module structure and invariant factors", criterion_10},
      {"virtual classes", criterion_11},
      {"knot sanity", criterion_12},
      {"split link", criterion_13},
  };
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, run] = criteria[i];
    std::string problem;
    try {
      problem = run();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      std::cout << "PASS " << i + 1 << " " << name << "\n";
    } else {
      ++failed;
      std::cout << "FAIL " << i + 1 << " " << name << ": " << problem << "\n";
    }
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << "acceptance: " << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size()
            << " passed in " << elapsed.count() << " s\n";
  return failed == 0 ? 0 : 1;
}
