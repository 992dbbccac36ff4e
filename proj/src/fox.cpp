#include "alexkit/fox.hpp"

#include <algorithm>

#include "alexkit/errors.hpp"

namespace alexkit {

FreeWord reduce_word(const std::vector<Letter>& raw) {
  FreeWord w;
  for (const auto& letter : raw) {
    if (letter.generator < 1 || (letter.exponent != 1 && letter.exponent != -1))
      throw ValidationError("invalid free-group letter");
    auto& out = w.letters_;
    if (!out.empty() && out.back().generator == letter.generator && out.back().exponent == -letter.exponent)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return w;
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> raw(letters_.rbegin(), letters_.rend());
  for (auto& l : raw) l.exponent = -l.exponent;
  return reduce_word(raw);
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  std::vector<Letter> raw = a.letters_;
  raw.insert(raw.end(), b.letters_.begin(), b.letters_.end());
  return reduce_word(raw);
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += " ";
    out += "x" + std::to_string(l.generator);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

AbelianWeights AbelianWeights::uniform(int generator_count) {
  AbelianWeights w(1);
  for (int g = 1; g <= generator_count; ++g) w.assign(g, MultiLaurentPoly::variable(1, 0));
  return w;
}

void AbelianWeights::assign(int generator, MultiLaurentPoly monomial) {
  if (monomial.variable_count() != vars_ || !monomial.is_monomial())
    throw ValidationError("abelian weight must be a unit monomial in the weight variables");
  weights_.insert_or_assign(generator, std::move(monomial));
}

const MultiLaurentPoly& AbelianWeights::weight(int generator) const {
  auto it = weights_.find(generator);
  if (it == weights_.end()) throw UnknownGenerator(generator);
  return it->second;
}

MultiLaurentPoly abelianize(const FreeWord& w, const AbelianWeights& weights) {
  MultiLaurentPoly prefix(weights.variable_count(), Rational(1));
  for (const auto& l : w.letters()) {
    const auto& x = weights.weight(l.generator);
    prefix = prefix * (l.exponent > 0 ? x : x.monomial_inverse());
  }
  return prefix;
}

MultiLaurentPoly fox_derivative_abelianized(const FreeWord& w, int generator, const AbelianWeights& weights) {
  const std::size_t s = weights.variable_count();
  MultiLaurentPoly prefix(s, Rational(1));
  MultiLaurentPoly result(s);
  for (const auto& l : w.letters()) {
    const auto& x = weights.weight(l.generator);
    if (l.exponent > 0) {
      // d(u x)/dx = du/dx + u
      if (l.generator == generator) result += prefix;
      prefix = prefix * x;
    } else {
      // d(u x^-1)/dx = du/dx - u x^-1
      prefix = prefix * x.monomial_inverse();
      if (l.generator == generator) result -= prefix;
    }
  }
  return result;
}

}  // namespace alexkit
