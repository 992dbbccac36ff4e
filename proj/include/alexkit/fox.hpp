#pragma once

#include <map>
#include <string>
#include <vector>

#include "alexkit/multi_laurent.hpp"

namespace alexkit {

/// One letter x_g^e of a free-group word, e = +-1.
struct Letter {
  int generator;
  int exponent;
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the free group on x_1, x_2, ...
class FreeWord {
 public:
  FreeWord() = default;
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  bool empty() const noexcept { return letters_.empty(); }
  FreeWord inverse() const;
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  std::string to_string() const;

 private:
  friend FreeWord reduce_word(const std::vector<Letter>& raw);
  std::vector<Letter> letters_;
};

/// Free reduction. Generator indices must be >= 1 and exponents +-1.
FreeWord reduce_word(const std::vector<Letter>& raw);

/// Abelianization map on generators: x_g -> a unit monomial.
class AbelianWeights {
 public:
  explicit AbelianWeights(std::size_t variable_count) : vars_(variable_count) {}
  /// Every generator 1..generator_count sent to t (one variable).
  static AbelianWeights uniform(int generator_count);

  void assign(int generator, MultiLaurentPoly monomial);
  /// Throws UnknownGenerator for unassigned generators.
  const MultiLaurentPoly& weight(int generator) const;
  std::size_t variable_count() const noexcept { return vars_; }

 private:
  std::size_t vars_;
  std::map<int, MultiLaurentPoly> weights_;
};

/// {w}: the image of w under the abelianization.
MultiLaurentPoly abelianize(const FreeWord& w, const AbelianWeights& weights);

/// {dw/dx_i}, accumulated in one left-to-right pass over the running
/// abelianized prefix.
MultiLaurentPoly fox_derivative_abelianized(const FreeWord& w, int generator, const AbelianWeights& weights);

}  // namespace alexkit
