#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alexkit/errors.hpp"
#include "alexkit/fox.hpp"
#include "support/random.hpp"

using namespace alexkit;

namespace {

const MultiLaurentPoly t = MultiLaurentPoly::variable(1, 0);
const MultiLaurentPoly one(1, Rational(1));

FreeWord word(std::vector<Letter> letters) { return reduce_word(letters); }

// x1 -> t1, x2 -> t2, x3 -> t1 t2^-1, x4 -> t2^2 on two variables.
AbelianWeights mixed_weights() {
  AbelianWeights w(2);
  const auto t1 = MultiLaurentPoly::variable(2, 0), t2 = MultiLaurentPoly::variable(2, 1);
  w.assign(1, t1);
  w.assign(2, t2);
  w.assign(3, t1 * t2.monomial_inverse());
  w.assign(4, t2 * t2);
  return w;
}

}  // namespace

TEST_CASE("free reduction examples") {
  CHECK(word({{1, 1}, {1, -1}}).empty());
  CHECK(word({{1, 1}, {2, 1}, {2, -1}, {1, 1}}) == word({{1, 1}, {1, 1}}));
  const std::vector<Letter> reduced{{1, 1}, {1, 1}, {2, 1}, {1, -1}};
  CHECK(word(reduced).letters() == reduced);
  CHECK(word({{2, -1}, {1, 1}, {1, -1}, {2, 1}}).empty());
  CHECK_THROWS_AS(word({{0, 1}}), ValidationError);
  CHECK_THROWS_AS(word({{1, 2}}), ValidationError);
  CHECK(word(reduced).to_string() == "x1 x1 x2 x1^-1");
  CHECK(word(reduced).inverse() * word(reduced) == FreeWord());
}

TEST_CASE("Fox derivative examples") {
  const auto w = word({{1, 1}, {1, 1}, {2, 1}, {1, -1}});
  const auto weights = AbelianWeights::uniform(2);
  CHECK(fox_derivative_abelianized(w, 1, weights) == one + t - t * t);
  CHECK(fox_derivative_abelianized(w, 2, weights) == t * t);
  CHECK(fox_derivative_abelianized(word({{1, -1}}), 1, weights) == -t.monomial_inverse());
  CHECK(fox_derivative_abelianized(word({{2, 1}}), 1, weights).is_zero());
  CHECK(fox_derivative_abelianized(FreeWord(), 1, weights).is_zero());
}

TEST_CASE("abelianization examples") {
  const auto weights = AbelianWeights::uniform(2);
  CHECK(abelianize(word({{1, 1}, {1, 1}, {2, 1}, {1, -1}}), weights) == t * t);
  CHECK(abelianize(FreeWord(), weights) == one);
  AbelianWeights link(2);
  link.assign(1, MultiLaurentPoly::variable(2, 0));
  CHECK(abelianize(word({{1, -1}}), link) == MultiLaurentPoly::variable(2, 0, -1));
}

TEST_CASE("weights must be known monomials") {
  const auto weights = AbelianWeights::uniform(2);
  CHECK_THROWS_AS(fox_derivative_abelianized(word({{3, 1}}), 1, weights), UnknownGenerator);
  CHECK_THROWS_AS(abelianize(word({{5, -1}}), weights), UnknownGenerator);
  AbelianWeights w(1);
  CHECK_THROWS_AS(w.assign(1, t + one), ValidationError);
  CHECK_THROWS_AS(w.assign(1, MultiLaurentPoly::variable(2, 0)), ValidationError);
}

TEST_CASE("property: fundamental identity") {
  gen::Rng rng(201);
  const auto weights = mixed_weights();
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = reduce_word(gen::raw_word(rng, 4, 12));
    MultiLaurentPoly rhs(2);
    for (int i = 1; i <= 4; ++i)
      rhs += fox_derivative_abelianized(w, i, weights) * (weights.weight(i) - MultiLaurentPoly(2, Rational(1)));
    CHECK(abelianize(w, weights) - MultiLaurentPoly(2, Rational(1)) == rhs);
  }
}

TEST_CASE("property: product and inverse rules") {
  gen::Rng rng(202);
  const auto weights = mixed_weights();
  for (int trial = 0; trial < 300; ++trial) {
    const auto u = reduce_word(gen::raw_word(rng, 4, 8));
    const auto v = reduce_word(gen::raw_word(rng, 4, 8));
    const int i = gen::uniform(rng, 1, 4);
    CHECK(fox_derivative_abelianized(u * v, i, weights) ==
          fox_derivative_abelianized(u, i, weights) + abelianize(u, weights) * fox_derivative_abelianized(v, i, weights));
    CHECK(fox_derivative_abelianized(u.inverse(), i, weights) ==
          -(abelianize(u, weights).monomial_inverse() * fox_derivative_abelianized(u, i, weights)));
  }
}

TEST_CASE("property: invariance under free reduction") {
  gen::Rng rng(203);
  const auto weights = mixed_weights();
  for (int trial = 0; trial < 200; ++trial) {
    auto raw = gen::raw_word(rng, 3, 6);
    // Insert a cancelling pair at a random place.
    const Letter l{gen::uniform(rng, 1, 3), gen::chance(rng, 0.5) ? 1 : -1};
    const auto at = raw.begin() + gen::uniform(rng, 0, static_cast<int>(raw.size()));
    auto padded = raw;
    padded.insert(padded.begin() + (at - raw.begin()), {l, {l.generator, -l.exponent}});
    const int i = gen::uniform(rng, 1, 3);
    CHECK(fox_derivative_abelianized(reduce_word(padded), i, weights) ==
          fox_derivative_abelianized(reduce_word(raw), i, weights));
    CHECK(reduce_word(padded) == reduce_word(raw));
  }
}
