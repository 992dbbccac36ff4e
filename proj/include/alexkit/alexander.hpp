#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alexkit/field.hpp"
#include "alexkit/fox.hpp"
#include "alexkit/knot_codes.hpp"
#include "alexkit/laurent.hpp"
#include "alexkit/matrix.hpp"
#include "alexkit/multi_laurent.hpp"

namespace alexkit {

/// Abelianized Fox Jacobian of the Wirtinger relators, one row per crossing
/// except the last (whose relation follows from the others).
struct AlexanderMatrix {
  Matrix<MultiLaurentPoly> rows;
  int arc_count = 1;
  std::size_t variable_count = 1;

  /// The same matrix over Q[t, t^-1]. Throws UseMultivariableRoute when s > 1.
  Matrix<LaurentPoly> univariate() const;
};

/// Every arc sent to t.
AbelianWeights knot_weights(const CrossingList& d);
/// Arc sent to t_c for its component c.
AbelianWeights component_weights(const CrossingList& d);

/// Positive crossing: x_j x_i x_j^-1 x_k^-1; negative: x_j^-1 x_i x_j x_k^-1,
/// with i = under_in, j = over, k = under_out.
FreeWord wirtinger_relator(const Crossing& c);

AlexanderMatrix alexander_matrix(const CrossingList& d, const AbelianWeights& weights);
inline AlexanderMatrix alexander_matrix(const CrossingList& d) { return alexander_matrix(d, knot_weights(d)); }

struct AlexanderData {
  /// delta_k[k-1] = Delta^k for k = 1..n, unit-normalized (0 when the ideal vanishes).
  std::vector<LaurentPoly> delta_k;
  std::vector<LaurentPoly> invariant_factors;
  /// (k, |S^k|) for the strata that are nonempty.
  std::vector<std::pair<int, int>> strata;

  const LaurentPoly& delta() const { return delta_k.front(); }
};

/// Elementary-ideal data of the module presented by `relations` on
/// `generator_count` generators.
AlexanderData module_data(const Matrix<LaurentPoly>& relations, std::size_t generator_count);
/// Throws UseMultivariableRoute for multivariate matrices.
AlexanderData alexander_data(const AlexanderMatrix& m);

/// n - rank of the matrix evaluated at t.
int fibre_dimension(const AlexanderMatrix& m, const RationalPoint& t);
int fibre_dimension(const AlexanderMatrix& m, const ComplexPoint& t);
int fibre_dimension(const AlexanderMatrix& m, const ScalarField& field,
                    double rank_tolerance = kDefaultRankTolerance);

/// Integer polynomial in the Lefschetz class L.
struct VirtualClassPoly {
  std::map<std::int64_t, std::int64_t> coefficients;

  /// Descending powers, e.g. "3*L^2 - 3*L".
  std::string to_string() const;
  friend bool operator==(const VirtualClassPoly&, const VirtualClassPoly&) = default;
};

/// L(L-1) + sum_k |S^k| (L^(k+1) - L).
VirtualClassPoly virtual_class(const AlexanderData& data);

struct RingPresentation {
  int generator_count = 1;
  Matrix<LaurentPoly> relations;

  /// Each relation as a linear form, e.g. "-a1 + (1 - t)*a2 + t*a3".
  std::vector<std::string> rendered() const;
};

/// Throws UseMultivariableRoute for links.
RingPresentation ring_presentation(const CrossingList& d);

/// Linear form sum_j row[j] a_(j+1).
std::string render_linear_form(const std::vector<LaurentPoly>& row);

/// gcd of the (n-1)-minors of the multivariable matrix. Throws UseUnivariateRoute for knots.
MultiLaurentPoly multivariable_alexander(const CrossingList& d);

}  // namespace alexkit
