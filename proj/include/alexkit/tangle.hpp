#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "alexkit/field.hpp"
#include "alexkit/knot_codes.hpp"
#include "alexkit/laurent.hpp"
#include "alexkit/matrix.hpp"
#include "alexkit/span.hpp"

namespace alexkit {

enum class Sign { Plus, Minus };
using TangleObject = std::vector<Sign>;

/// "(+,-,+)"; the empty object is "()".
std::string render_object(const TangleObject& object);

enum class Generator { IdPlus, IdMinus, XPlus, XMinus, EvPM, EvMP, CoevPM, CoevMP };

TangleObject generator_source(Generator g);
TangleObject generator_target(Generator g);
/// DSL spelling: id+, id-, xp, xm, ev+-, ev-+, coev+-, coev-+.
std::string generator_name(Generator g);

/// Immutable well-typed tangle expression.
class TangleExpr {
 public:
  enum class Kind { Gen, Compose, Tensor };

  static TangleExpr gen(Generator g);
  /// `first` then `then`. Throws BoundaryMismatch when the boundaries differ.
  static TangleExpr compose(const TangleExpr& first, const TangleExpr& then);
  static TangleExpr tensor(const TangleExpr& left, const TangleExpr& right);

  Kind kind() const noexcept { return node_->kind; }
  Generator generator() const noexcept { return node_->gen; }
  const TangleExpr& first() const { return *node_->a; }
  const TangleExpr& second() const { return *node_->b; }
  const TangleObject& source() const noexcept { return node_->source; }
  const TangleObject& target() const noexcept { return node_->target; }
  /// Number of generator occurrences.
  std::size_t size() const noexcept { return node_->size; }

  /// Fully parenthesized DSL text that parses back to the same tree.
  std::string to_string() const;

 private:
  struct Node {
    Kind kind;
    Generator gen;
    std::shared_ptr<const TangleExpr> a, b;
    TangleObject source, target;
    std::size_t size;
  };
  explicit TangleExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// expr := term (";" term)*, term := factor ("#" factor)*,
/// factor := "(" expr ")" | generator.
TangleExpr parse_tangle(std::string_view text);

/// Identity on n strands of the given sign; requires n >= 1.
TangleExpr identity_expr(Sign sign, std::size_t n);
/// Braid word as a tangle (+^n) -> (+^n): the rightmost letter is applied first.
TangleExpr braid_tangle(const BraidWord& b);
/// Closure of a braid: nested coev+-, the braid tensored with id-^n, nested ev+-.
TangleExpr braid_closure_tangle(const BraidWord& b);

template <class F>
Span<F> generator_span(Generator g, const F& t);

Span<RationalFunction> evaluate_tangle(const TangleExpr& e, const GenericPoint& t);
Span<Rational> evaluate_tangle(const TangleExpr& e, const RationalPoint& t);
Span<Complex> evaluate_tangle(const TangleExpr& e, const ComplexPoint& t);
AnySpan evaluate_tangle(const TangleExpr& e, const ScalarField& field, double tol = kDefaultRankTolerance);

/// The tangle as one global linear system: a variable per arc, one
/// equation per crossing, boundary positions mapped to arcs.
struct BoundarySystem {
  std::size_t arc_count = 0;
  Matrix<LaurentPoly> equations;
  std::vector<std::size_t> incoming;
  std::vector<std::size_t> outgoing;
};

BoundarySystem boundary_system(const TangleExpr& e);

Span<RationalFunction> tangle_linear_system(const TangleExpr& e, const GenericPoint& t);
Span<Rational> tangle_linear_system(const TangleExpr& e, const RationalPoint& t);
Span<Complex> tangle_linear_system(const TangleExpr& e, const ComplexPoint& t);
AnySpan tangle_linear_system(const TangleExpr& e, const ScalarField& field, double tol = kDefaultRankTolerance);

/// Alexander polynomial of a closed tangle from its global relation matrix:
/// Delta^1 of the module presented on the arcs. Throws ValidationError if
/// the tangle has boundary.
LaurentPoly closed_tangle_alexander(const TangleExpr& e);

/// Spans of the n-strand evaluation (+^n,-^n) -> () and coevaluation
/// () -> (+^n,-^n): mid C^n, z -> (z, z*) with z* the reversed tuple.
template <class F>
Span<F> evaluation_span(std::size_t n);
template <class F>
Span<F> coevaluation_span(std::size_t n);

std::size_t mid_dim(const AnySpan& s);
std::size_t src_dim(const AnySpan& s);
std::size_t tgt_dim(const AnySpan& s);
/// Throws DimensionMismatch when the spans live over different fields.
bool spans_equivalent(const AnySpan& a, const AnySpan& b, double tol = kDefaultRankTolerance);

}  // namespace alexkit
