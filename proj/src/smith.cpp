#include "alexkit/smith.hpp"

#include <cstdint>
#include <optional>

namespace alexkit {

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

std::optional<Position> least_spread(const Matrix<LaurentPoly>& m, std::size_t k) {
  std::optional<Position> best;
  std::int64_t best_spread = 0;
  for (std::size_t i = k; i < m.rows(); ++i)
    for (std::size_t j = k; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.is_zero()) continue;
      if (!best || e.spread() < best_spread) {
        best = Position{i, j};
        best_spread = e.spread();
      }
    }
  return best;
}

// Least-spread nonzero entry on row k or column k (from index k onwards).
Position least_spread_on_cross(const Matrix<LaurentPoly>& m, std::size_t k) {
  Position best{k, k};
  std::int64_t best_spread = m(k, k).is_zero() ? INT64_MAX : m(k, k).spread();
  for (std::size_t i = k + 1; i < m.rows(); ++i)
    if (!m(i, k).is_zero() && m(i, k).spread() < best_spread) {
      best = {i, k};
      best_spread = m(i, k).spread();
    }
  for (std::size_t j = k + 1; j < m.cols(); ++j)
    if (!m(k, j).is_zero() && m(k, j).spread() < best_spread) {
      best = {k, j};
      best_spread = m(k, j).spread();
    }
  return best;
}

void move_to_pivot(Matrix<LaurentPoly>& m, Position p, std::size_t k) {
  m.swap_rows(k, p.row);
  m.swap_cols(k, p.col);
}

// Eliminates row and column k against the pivot. Returns false when some
// remainder survived, meaning a smaller pivot is now available.
bool clear_cross(Matrix<LaurentPoly>& m, std::size_t k) {
  bool clean = true;
  const LaurentPoly pivot = m(k, k);
  for (std::size_t i = k + 1; i < m.rows(); ++i) {
    if (m(i, k).is_zero()) continue;
    auto q = divmod(m(i, k), pivot).first;
    for (std::size_t j = k; j < m.cols(); ++j)
      if (!m(k, j).is_zero()) m(i, j) -= q * m(k, j);
    if (!m(i, k).is_zero()) clean = false;
  }
  for (std::size_t j = k + 1; j < m.cols(); ++j) {
    if (m(k, j).is_zero()) continue;
    auto q = divmod(m(k, j), pivot).first;
    for (std::size_t i = k; i < m.rows(); ++i)
      if (!m(i, k).is_zero()) m(i, j) -= q * m(i, k);
    if (!m(k, j).is_zero()) clean = false;
  }
  return clean;
}

}  // namespace

std::vector<LaurentPoly> smith_normal_form(Matrix<LaurentPoly> m) {
  std::vector<LaurentPoly> factors;
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = 0; k < limit; ++k) {
    auto start = least_spread(m, k);
    if (!start) break;
    move_to_pivot(m, *start, k);
    for (;;) {
      if (!clear_cross(m, k)) {
        move_to_pivot(m, least_spread_on_cross(m, k), k);
        continue;
      }
      bool divisible = true;
      for (std::size_t i = k + 1; i < m.rows() && divisible; ++i)
        for (std::size_t j = k + 1; j < m.cols(); ++j)
          if (!divides(m(k, k), m(i, j))) {
            for (std::size_t c = k; c < m.cols(); ++c) m(k, c) += m(i, c);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    factors.push_back(normalize_associate(m(k, k)));
  }
  return factors;
}

}  // namespace alexkit
