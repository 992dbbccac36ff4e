#include "alexkit/alexander.hpp"

#include <sstream>

#include "alexkit/errors.hpp"
#include "alexkit/linalg.hpp"
#include "alexkit/smith.hpp"

namespace alexkit {

Matrix<LaurentPoly> AlexanderMatrix::univariate() const {
  if (variable_count != 1) throw UseMultivariableRoute();
  Matrix<LaurentPoly> m(rows.rows(), rows.cols(), LaurentPoly());
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) m(i, j) = rows(i, j).to_univariate();
  return m;
}

AbelianWeights knot_weights(const CrossingList& d) { return AbelianWeights::uniform(d.arc_count()); }

AbelianWeights component_weights(const CrossingList& d) {
  const auto s = static_cast<std::size_t>(d.component_count());
  AbelianWeights w(s);
  for (int arc = 1; arc <= d.arc_count(); ++arc)
    w.assign(arc, MultiLaurentPoly::variable(s, static_cast<std::size_t>(d.component_of(arc) - 1)));
  return w;
}

FreeWord wirtinger_relator(const Crossing& c) {
  const int e = c.sign > 0 ? 1 : -1;
  return reduce_word({{c.over, e}, {c.under_in, 1}, {c.over, -e}, {c.under_out, -1}});
}

AlexanderMatrix alexander_matrix(const CrossingList& d, const AbelianWeights& weights) {
  const std::size_t s = weights.variable_count();
  const auto n = static_cast<std::size_t>(d.arc_count());
  const auto& crossings = d.crossings();
  const std::size_t kept = crossings.empty() ? 0 : crossings.size() - 1;
  AlexanderMatrix m;
  m.arc_count = d.arc_count();
  m.variable_count = s;
  m.rows = Matrix<MultiLaurentPoly>(kept, n, MultiLaurentPoly(s));
  for (std::size_t r = 0; r < kept; ++r) {
    const FreeWord w = wirtinger_relator(crossings[r]);
    for (std::size_t a = 0; a < n; ++a)
      m.rows(r, a) = fox_derivative_abelianized(w, static_cast<int>(a + 1), weights);
  }
  return m;
}

AlexanderData module_data(const Matrix<LaurentPoly>& relations, std::size_t generator_count) {
  AlexanderData data;
  data.invariant_factors = smith_normal_form(relations);
  const std::size_t r = data.invariant_factors.size();
  for (std::size_t k = 1; k <= generator_count; ++k) {
    const std::size_t size = generator_count - k;
    if (size > r) {
      data.delta_k.emplace_back();
      continue;
    }
    LaurentPoly product(1);
    for (std::size_t i = 0; i < size; ++i) product *= data.invariant_factors[i];
    data.delta_k.push_back(normalize_unit(product));
  }
  for (std::size_t k = 1; k < generator_count; ++k) {
    const auto& here = data.delta_k[k - 1];
    if (here.is_zero()) continue;
    const int count = distinct_root_count(here) - distinct_root_count(data.delta_k[k]);
    if (count != 0) data.strata.emplace_back(static_cast<int>(k), count);
  }
  return data;
}

AlexanderData alexander_data(const AlexanderMatrix& m) {
  return module_data(m.univariate(), static_cast<std::size_t>(m.arc_count));
}

int fibre_dimension(const AlexanderMatrix& m, const RationalPoint& t) {
  const auto u = m.univariate();
  return m.arc_count - static_cast<int>(rank(u.map([&](const LaurentPoly& p) { return t(p); })));
}

int fibre_dimension(const AlexanderMatrix& m, const ComplexPoint& t) {
  const auto u = m.univariate();
  return m.arc_count - static_cast<int>(rank(u.map([&](const LaurentPoly& p) { return t(p); }), t.rank_tolerance()));
}

int fibre_dimension(const AlexanderMatrix& m, const ScalarField& field, double rank_tolerance) {
  struct Visitor {
    const AlexanderMatrix& m;
    double tol;
    int operator()(const GenericT&) const {
      const auto u = m.univariate();
      return m.arc_count - static_cast<int>(rank(u.map([](const LaurentPoly& p) { return RationalFunction(p); })));
    }
    int operator()(const FixedRational& f) const { return fibre_dimension(m, RationalPoint(f.t)); }
    int operator()(const FixedComplex& f) const { return fibre_dimension(m, ComplexPoint(f.t, tol)); }
  };
  return std::visit(Visitor{m, rank_tolerance}, field);
}

std::string VirtualClassPoly::to_string() const {
  LaurentPoly p;
  for (const auto& [e, c] : coefficients) p += LaurentPoly::monomial(Rational(static_cast<long>(c)), e);
  return p.to_string(TermOrder::Descending, "L");
}

VirtualClassPoly virtual_class(const AlexanderData& data) {
  std::map<std::int64_t, std::int64_t> c{{2, 1}, {1, -1}};
  for (const auto& [k, count] : data.strata) {
    c[k + 1] += count;
    c[1] -= count;
  }
  VirtualClassPoly v;
  for (const auto& [e, coeff] : c)
    if (coeff != 0) v.coefficients.emplace(e, coeff);
  return v;
}

std::string render_linear_form(const std::vector<LaurentPoly>& row) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t j = 0; j < row.size(); ++j) {
    const LaurentPoly& c = row[j];
    if (c.is_zero()) continue;
    const std::string var = "a" + std::to_string(j + 1);
    // A monomial coefficient carries its sign outside; anything else is parenthesized.
    const bool negative = c.is_monomial() && c.terms().begin()->second < 0;
    const LaurentPoly mag = negative ? -c : c;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    if (mag == LaurentPoly(1))
      out << var;
    else if (mag.is_monomial())
      out << mag.to_string() << "*" << var;
    else
      out << "(" << mag.to_string() << ")*" << var;
  }
  return first ? "0" : out.str();
}

std::vector<std::string> RingPresentation::rendered() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < relations.rows(); ++i) {
    std::vector<LaurentPoly> row;
    for (std::size_t j = 0; j < relations.cols(); ++j) row.push_back(relations(i, j));
    out.push_back(render_linear_form(row));
  }
  return out;
}

RingPresentation ring_presentation(const CrossingList& d) {
  if (d.component_count() != 1) throw UseMultivariableRoute();
  return RingPresentation{d.arc_count(), alexander_matrix(d).univariate()};
}

namespace {

// Calls f on every increasing k-subset of {0..n-1}.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MultiLaurentPoly multivariable_alexander(const CrossingList& d) {
  if (d.component_count() < 2) throw UseUnivariateRoute();
  const auto m = alexander_matrix(d, component_weights(d));
  const std::size_t s = m.variable_count;
  const std::size_t size = static_cast<std::size_t>(d.arc_count()) - 1;
  const MultiLaurentPoly one(s, Rational(1));
  std::vector<MultiLaurentPoly> minors;
  for_each_subset(m.rows.rows(), size, [&](const std::vector<std::size_t>& rs) {
    for_each_subset(m.rows.cols(), size, [&](const std::vector<std::size_t>& cs) {
      auto det = determinant(m.rows.select(rs, cs), one);
      if (!det.is_zero()) minors.push_back(std::move(det));
    });
  });
  if (minors.empty()) return MultiLaurentPoly(s);
  return gcd_multivariate(minors);
}

}  // namespace alexkit
