#pragma once

#include <cstddef>

#include "alexkit/field.hpp"
#include "alexkit/knot_codes.hpp"
#include "alexkit/laurent.hpp"
#include "alexkit/matrix.hpp"
#include "alexkit/span.hpp"

namespace alexkit {

using BurauMatrix = Matrix<LaurentPoly>;

/// Generator matrix of letter +-i on n strands: the block [[1-t, t], [1, 0]]
/// (or its inverse [[0, 1], [t^-1, 1-t^-1]]) at rows and columns i, i+1.
BurauMatrix burau_generator(int strands, int letter);
/// Product of the generator matrices in word order; identity for the empty word.
BurauMatrix burau_unreduced(const BraidWord& b);

/// Action on the quotient by the fixed line, in the coordinates
/// y_k = x_k - x_(k+1). Requires a matrix fixing (1, ..., 1).
Matrix<LaurentPoly> reduce_burau(const BurauMatrix& m);
/// Throws EmptyMatrix for one strand.
Matrix<LaurentPoly> burau_reduced(const BraidWord& b);

/// Span 0 <- ker(Id - m) -> 0 over the chosen field.
AnySpan span_trace_fix(const BurauMatrix& m, const ScalarField& field, double tol = kDefaultRankTolerance);

/// det of Id - burau(b) with row `row` and column `col` deleted, unit-normalized
/// (0 stays 0). With the default deletion the result is cross-checked
/// against the reduced formula whenever the closure is a knot.
LaurentPoly closure_alexander(const BraidWord& b, std::size_t row = 0, std::size_t col = 0);

/// (1 - t) / (1 - t^n) det(Id - reduced burau(b)), unit-normalized.
/// Throws NotDivisible when the quotient is not a Laurent polynomial.
LaurentPoly closure_alexander_reduced(const BraidWord& b);

}  // namespace alexkit
