#include "alexkit/tangle.hpp"

#include <cctype>
#include <map>
#include <numeric>
#include <optional>

#include "alexkit/alexander.hpp"
#include "alexkit/errors.hpp"

namespace alexkit {

std::string render_object(const TangleObject& object) {
  std::string out = "(";
  for (std::size_t i = 0; i < object.size(); ++i) {
    if (i) out += ",";
    out += object[i] == Sign::Plus ? "+" : "-";
  }
  return out + ")";
}

TangleObject generator_source(Generator g) {
  using enum Sign;
  switch (g) {
    case Generator::IdPlus: return {Plus};
    case Generator::IdMinus: return {Minus};
    case Generator::XPlus:
    case Generator::XMinus: return {Plus, Plus};
    case Generator::EvPM: return {Plus, Minus};
    case Generator::EvMP: return {Minus, Plus};
    case Generator::CoevPM:
    case Generator::CoevMP: return {};
  }
  return {};
}

TangleObject generator_target(Generator g) {
  using enum Sign;
  switch (g) {
    case Generator::IdPlus: return {Plus};
    case Generator::IdMinus: return {Minus};
    case Generator::XPlus:
    case Generator::XMinus: return {Plus, Plus};
    case Generator::EvPM:
    case Generator::EvMP: return {};
    case Generator::CoevPM: return {Plus, Minus};
    case Generator::CoevMP: return {Minus, Plus};
  }
  return {};
}

std::string generator_name(Generator g) {
  switch (g) {
    case Generator::IdPlus: return "id+";
    case Generator::IdMinus: return "id-";
    case Generator::XPlus: return "xp";
    case Generator::XMinus: return "xm";
    case Generator::EvPM: return "ev+-";
    case Generator::EvMP: return "ev-+";
    case Generator::CoevPM: return "coev+-";
    case Generator::CoevMP: return "coev-+";
  }
  return "?";
}

TangleExpr TangleExpr::gen(Generator g) {
  return TangleExpr(std::make_shared<const Node>(
      Node{Kind::Gen, g, nullptr, nullptr, generator_source(g), generator_target(g), 1}));
}

TangleExpr TangleExpr::compose(const TangleExpr& first, const TangleExpr& then) {
  if (first.target() != then.source())
    throw BoundaryMismatch(0, render_object(first.target()), render_object(then.source()));
  return TangleExpr(std::make_shared<const Node>(Node{Kind::Compose, Generator::IdPlus,
                                                      std::make_shared<const TangleExpr>(first),
                                                      std::make_shared<const TangleExpr>(then), first.source(),
                                                      then.target(), first.size() + then.size()}));
}

TangleExpr TangleExpr::tensor(const TangleExpr& left, const TangleExpr& right) {
  TangleObject source = left.source();
  source.insert(source.end(), right.source().begin(), right.source().end());
  TangleObject target = left.target();
  target.insert(target.end(), right.target().begin(), right.target().end());
  return TangleExpr(std::make_shared<const Node>(Node{Kind::Tensor, Generator::IdPlus,
                                                      std::make_shared<const TangleExpr>(left),
                                                      std::make_shared<const TangleExpr>(right), std::move(source),
                                                      std::move(target), left.size() + right.size()}));
}

std::string TangleExpr::to_string() const {
  switch (kind()) {
    case Kind::Gen: return generator_name(generator());
    case Kind::Compose: return "(" + first().to_string() + " ; " + second().to_string() + ")";
    case Kind::Tensor: return "(" + first().to_string() + " # " + second().to_string() + ")";
  }
  return {};
}

namespace {

class TangleParser {
 public:
  explicit TangleParser(std::string_view text) : text_(text) {}

  TangleExpr parse() {
    auto e = expr();
    skip();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  TangleExpr expr() {
    auto e = term();
    for (;;) {
      skip();
      if (!accept(';')) return e;
      skip();
      const std::size_t at = pos_;
      auto next = term();
      if (e.target() != next.source())
        throw BoundaryMismatch(at, render_object(e.target()), render_object(next.source()));
      e = TangleExpr::compose(e, next);
    }
  }

  TangleExpr term() {
    auto e = factor();
    while (accept('#')) e = TangleExpr::tensor(e, factor());
    return e;
  }

  TangleExpr factor() {
    skip();
    if (accept('(')) {
      auto e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    static const std::pair<std::string_view, Generator> names[] = {
        {"coev+-", Generator::CoevPM}, {"coev-+", Generator::CoevMP}, {"ev+-", Generator::EvPM},
        {"ev-+", Generator::EvMP},     {"id+", Generator::IdPlus},    {"id-", Generator::IdMinus},
        {"xp", Generator::XPlus},      {"xm", Generator::XMinus}};
    for (const auto& [name, g] : names)
      if (text_.substr(pos_, name.size()) == name) {
        const std::size_t end = pos_ + name.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) break;
        pos_ = end;
        return TangleExpr::gen(g);
      }
    fail(pos_ < text_.size() ? "unknown generator" : "unexpected end of input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TangleExpr parse_tangle(std::string_view text) { return TangleParser(text).parse(); }

TangleExpr identity_expr(Sign sign, std::size_t n) {
  if (n == 0) throw ValidationError("identity tangle needs at least one strand");
  const auto g = TangleExpr::gen(sign == Sign::Plus ? Generator::IdPlus : Generator::IdMinus);
  auto e = g;
  for (std::size_t i = 1; i < n; ++i) e = TangleExpr::tensor(e, g);
  return e;
}

namespace {

// id^(p) # x # id^(n-p-2) on positive strands.
TangleExpr crossing_at(std::size_t n, std::size_t p, Generator x) {
  auto e = TangleExpr::gen(x);
  if (p > 0) e = TangleExpr::tensor(identity_expr(Sign::Plus, p), e);
  if (p + 2 < n) e = TangleExpr::tensor(e, identity_expr(Sign::Plus, n - p - 2));
  return e;
}

}  // namespace

TangleExpr braid_tangle(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands);
  if (b.letters.empty()) return identity_expr(Sign::Plus, n);
  std::optional<TangleExpr> e;
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    auto x = crossing_at(n, static_cast<std::size_t>(std::abs(*it) - 1), *it > 0 ? Generator::XPlus : Generator::XMinus);
    e = e ? TangleExpr::compose(*e, x) : x;
  }
  return *e;
}

TangleExpr braid_closure_tangle(const BraidWord& b) {
  const auto n = static_cast<std::size_t>(b.strands);
  auto cup = TangleExpr::gen(Generator::CoevPM);
  auto cap = TangleExpr::gen(Generator::EvPM);
  for (std::size_t k = 1; k < n; ++k) {
    auto wrap = [k](Generator g) {
      return TangleExpr::tensor(TangleExpr::tensor(identity_expr(Sign::Plus, k), TangleExpr::gen(g)),
                                identity_expr(Sign::Minus, k));
    };
    cup = TangleExpr::compose(cup, wrap(Generator::CoevPM));
    cap = TangleExpr::compose(wrap(Generator::EvPM), cap);
  }
  auto middle = TangleExpr::tensor(braid_tangle(b), identity_expr(Sign::Minus, n));
  return TangleExpr::compose(TangleExpr::compose(cup, middle), cap);
}

template <class F>
Span<F> generator_span(Generator g, const F& t) {
  const F zero(0), one(1);
  const F tinv = one / t;
  switch (g) {
    case Generator::IdPlus:
    case Generator::IdMinus: return identity_span<F>(1);
    case Generator::XPlus: return {Matrix<F>::identity(2, zero, one), Matrix<F>{{one - t, t}, {one, zero}}};
    case Generator::XMinus:
      return {Matrix<F>::identity(2, zero, one), Matrix<F>{{zero, one}, {tinv, one - tinv}}};
    case Generator::EvPM:
    case Generator::EvMP: return {Matrix<F>(2, 1, one), Matrix<F>(0, 1, zero)};
    case Generator::CoevPM:
    case Generator::CoevMP: return {Matrix<F>(0, 1, zero), Matrix<F>(2, 1, one)};
  }
  return identity_span<F>(0);
}

template Span<RationalFunction> generator_span(Generator, const RationalFunction&);
template Span<Rational> generator_span(Generator, const Rational&);
template Span<Complex> generator_span(Generator, const Complex&);

namespace {

template <class F>
Span<F> evaluate_with(const TangleExpr& e, const F& t, double tol) {
  switch (e.kind()) {
    case TangleExpr::Kind::Gen: return generator_span(e.generator(), t);
    case TangleExpr::Kind::Compose:
      return compose_spans(evaluate_with(e.first(), t, tol), evaluate_with(e.second(), t, tol), tol);
    case TangleExpr::Kind::Tensor: return tensor_spans(evaluate_with(e.first(), t, tol), evaluate_with(e.second(), t, tol));
  }
  return identity_span<F>(0);
}

}  // namespace

Span<RationalFunction> evaluate_tangle(const TangleExpr& e, const GenericPoint&) {
  return evaluate_with(e, RationalFunction(LaurentPoly::t()), 0.0);
}
Span<Rational> evaluate_tangle(const TangleExpr& e, const RationalPoint& t) { return evaluate_with(e, t.t(), 0.0); }
Span<Complex> evaluate_tangle(const TangleExpr& e, const ComplexPoint& t) {
  return evaluate_with(e, t.t(), t.rank_tolerance());
}

AnySpan evaluate_tangle(const TangleExpr& e, const ScalarField& field, double tol) {
  struct Visitor {
    const TangleExpr& e;
    double tol;
    AnySpan operator()(const GenericT&) const { return evaluate_tangle(e, GenericPoint{}); }
    AnySpan operator()(const FixedRational& f) const { return evaluate_tangle(e, RationalPoint(f.t)); }
    AnySpan operator()(const FixedComplex& f) const { return evaluate_tangle(e, ComplexPoint(f.t, tol)); }
  };
  return std::visit(Visitor{e, tol}, field);
}

namespace {

class SystemBuilder {
 public:
  std::size_t fresh() {
    parent_.push_back(parent_.size());
    return parent_.size() - 1;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  void equation(std::vector<std::pair<std::size_t, LaurentPoly>> terms) { equations_.push_back(std::move(terms)); }

  std::vector<std::size_t> walk(const TangleExpr& e, const std::vector<std::size_t>& in) {
    switch (e.kind()) {
      case TangleExpr::Kind::Gen: return generator(e.generator(), in);
      case TangleExpr::Kind::Compose: return walk(e.second(), walk(e.first(), in));
      case TangleExpr::Kind::Tensor: {
        const std::size_t split = e.first().source().size();
        std::vector<std::size_t> lhs(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(split));
        std::vector<std::size_t> rhs(in.begin() + static_cast<std::ptrdiff_t>(split), in.end());
        auto out = walk(e.first(), lhs);
        auto more = walk(e.second(), rhs);
        out.insert(out.end(), more.begin(), more.end());
        return out;
      }
    }
    return {};
  }

  BoundarySystem finish(const std::vector<std::size_t>& in, const std::vector<std::size_t>& out) {
    std::map<std::size_t, std::size_t> index;
    for (std::size_t a = 0; a < parent_.size(); ++a) index.try_emplace(find(a), index.size());
    auto arc = [&](std::size_t raw) { return index.at(find(raw)); };
    BoundarySystem s;
    s.arc_count = index.size();
    s.equations = Matrix<LaurentPoly>(equations_.size(), s.arc_count, LaurentPoly());
    for (std::size_t r = 0; r < equations_.size(); ++r)
      for (const auto& [raw, c] : equations_[r]) s.equations(r, arc(raw)) += c;
    for (auto a : in) s.incoming.push_back(arc(a));
    for (auto a : out) s.outgoing.push_back(arc(a));
    return s;
  }

 private:
  std::vector<std::size_t> generator(Generator g, const std::vector<std::size_t>& in) {
    const LaurentPoly t = LaurentPoly::t();
    const LaurentPoly tinv = LaurentPoly::t(-1);
    switch (g) {
      case Generator::IdPlus:
      case Generator::IdMinus: return in;
      case Generator::XPlus: {
        // u = a1 |> a2 = t a2 + (1 - t) a1 leaves on the left, a1 continues on the right.
        const std::size_t u = fresh();
        equation({{in[0], LaurentPoly(1) - t}, {in[1], t}, {u, LaurentPoly(-1)}});
        return {u, in[0]};
      }
      case Generator::XMinus: {
        const std::size_t w = fresh();
        equation({{in[0], tinv}, {in[1], LaurentPoly(1) - tinv}, {w, LaurentPoly(-1)}});
        return {in[1], w};
      }
      case Generator::EvPM:
      case Generator::EvMP: unite(in[0], in[1]); return {};
      case Generator::CoevPM:
      case Generator::CoevMP: {
        const std::size_t a = fresh();
        return {a, a};
      }
    }
    return {};
  }

  std::vector<std::size_t> parent_;
  std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> equations_;
};

template <class F, class Point>
Span<F> solve_system(const BoundarySystem& s, const Point& point, double tol) {
  const Matrix<F> basis = detail::field_kernel(s.equations.map([&](const LaurentPoly& p) { return point(p); }), tol);
  std::vector<std::size_t> all(basis.cols());
  std::iota(all.begin(), all.end(), 0);
  return {basis.select(s.incoming, all), basis.select(s.outgoing, all)};
}

}  // namespace

BoundarySystem boundary_system(const TangleExpr& e) {
  SystemBuilder b;
  std::vector<std::size_t> in;
  for (std::size_t i = 0; i < e.source().size(); ++i) in.push_back(b.fresh());
  const auto out = b.walk(e, in);
  return b.finish(in, out);
}

Span<RationalFunction> tangle_linear_system(const TangleExpr& e, const GenericPoint& t) {
  return solve_system<RationalFunction>(boundary_system(e), t, 0.0);
}
Span<Rational> tangle_linear_system(const TangleExpr& e, const RationalPoint& t) {
  return solve_system<Rational>(boundary_system(e), t, 0.0);
}
Span<Complex> tangle_linear_system(const TangleExpr& e, const ComplexPoint& t) {
  return solve_system<Complex>(boundary_system(e), t, t.rank_tolerance());
}

AnySpan tangle_linear_system(const TangleExpr& e, const ScalarField& field, double tol) {
  struct Visitor {
    const TangleExpr& e;
    double tol;
    AnySpan operator()(const GenericT&) const { return tangle_linear_system(e, GenericPoint{}); }
    AnySpan operator()(const FixedRational& f) const { return tangle_linear_system(e, RationalPoint(f.t)); }
    AnySpan operator()(const FixedComplex& f) const { return tangle_linear_system(e, ComplexPoint(f.t, tol)); }
  };
  return std::visit(Visitor{e, tol}, field);
}

LaurentPoly closed_tangle_alexander(const TangleExpr& e) {
  if (!e.source().empty() || !e.target().empty())
    throw ValidationError("Alexander polynomial needs a closed tangle, got " + render_object(e.source()) + " -> " +
                          render_object(e.target()));
  const auto s = boundary_system(e);
  return module_data(s.equations, s.arc_count).delta();
}

template <class F>
Span<F> evaluation_span(std::size_t n) {
  Matrix<F> left(2 * n, n, F(0));
  for (std::size_t i = 0; i < n; ++i) {
    left(i, i) = F(1);
    left(2 * n - 1 - i, i) = F(1);
  }
  return {left, Matrix<F>(0, n, F(0))};
}

template <class F>
Span<F> coevaluation_span(std::size_t n) {
  auto e = evaluation_span<F>(n);
  return {e.right, e.left};
}

template Span<RationalFunction> evaluation_span(std::size_t);
template Span<Rational> evaluation_span(std::size_t);
template Span<Complex> evaluation_span(std::size_t);
template Span<RationalFunction> coevaluation_span(std::size_t);
template Span<Rational> coevaluation_span(std::size_t);
template Span<Complex> coevaluation_span(std::size_t);

std::size_t mid_dim(const AnySpan& s) {
  return std::visit([](const auto& x) { return x.mid_dim(); }, s);
}
std::size_t src_dim(const AnySpan& s) {
  return std::visit([](const auto& x) { return x.src_dim(); }, s);
}
std::size_t tgt_dim(const AnySpan& s) {
  return std::visit([](const auto& x) { return x.tgt_dim(); }, s);
}

bool spans_equivalent(const AnySpan& a, const AnySpan& b, double tol) {
  if (a.index() != b.index()) throw DimensionMismatch("span equivalence: spans over different fields");
  return std::visit(
      [&](const auto& x) {
        using S = std::decay_t<decltype(x)>;
        return spans_equivalent(x, std::get<S>(b), tol);
      },
      a);
}

}  // namespace alexkit
