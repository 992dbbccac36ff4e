#pragma once

#include <vector>

#include "alexkit/laurent.hpp"
#include "alexkit/matrix.hpp"

namespace alexkit {

/// Invariant factors d1 | d2 | ... | dr of a matrix over the PID Q[t, t^-1],
/// r the rank over Q(t). Each factor is normalize_associate'd.
///
/// Pivot rule: the nonzero entry of least spread, ties broken row-major.
std::vector<LaurentPoly> smith_normal_form(Matrix<LaurentPoly> m);

}  // namespace alexkit
