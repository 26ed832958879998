#include <doctest.h>

#include "nvs/words.hpp"
#include "nvs/zeta_trunc.hpp"

using namespace nvs;

TEST_CASE("word translations") {
  ZWord w{1, 3, 2};
  EWord e = zword_to_eword(w);
  CHECK(e == EWord({1, 1, 0, 0, 1, 0}));
  CHECK(eword_to_zword(e) == w);
  CHECK(!eword_to_zword(EWord({0, 1})).has_value());
  CHECK(is_admissible({1, 2}));
  CHECK(is_admissible({}));
  CHECK(!is_admissible({2, 1}));
}

TEST_CASE("depth-one stuffle") {
  ZPoly p = stuffle(ZWord{2}, ZWord{3});
  ZPoly expect;
  expect.add({2, 3}, 1);
  expect.add({3, 2}, 1);
  expect.add({5}, 1);
  CHECK(p == expect);
}

TEST_CASE("two-letter shuffle") {
  EPoly p = shuffle(EWord{1}, EWord{0});
  EPoly expect;
  expect.add({1, 0}, 1);
  expect.add({0, 1}, 1);
  CHECK(p == expect);
}

TEST_CASE("shuffle lemma instance") {
  // z1 z2 sh z1 = 3 z1 z1 z2 + z1 z2 z1 (a = 1, c = 1)
  ZPoly p = shuffle_z({1, 2}, {1});
  ZPoly expect;
  expect.add({1, 1, 2}, 3);
  expect.add({1, 2, 1}, 1);
  CHECK(p == expect);
}

TEST_CASE("stuffle product against truncations") {
  for (long M : {11L, 30L}) {
    ZPoly p = stuffle(ZWord{2, 1}, ZWord{3});
    Rational lhs = zeta_trunc({2, 1}, M, false) * zeta_trunc({3}, M, false);
    Rational rhs(0);
    for (const auto& [w, c] : p.terms) rhs += c * zeta_trunc(w, M, false);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("regularization map") {
  RegPolynomial t = regularize({1}, RegSide::Stuffle);
  REQUIRE(t.degree() == 1);
  CHECK(t.coeff[1].terms.at({}) == 1);
  RegPolynomial t_sh = regularize({1}, RegSide::Shuffle);
  CHECK(t_sh.degree() == 1);
  // z1 z1: Z*(1,1;T) = (T^2 - zeta(2)) / 2
  RegPolynomial t11 = regularize({1, 1}, RegSide::Stuffle);
  CHECK(t11.coeff[2].terms.at({}) == Rational(1, 2));
  CHECK(t11.coeff[0].terms.at({2}) == Rational(-1, 2));
  // shuffle side: Z^sh(1,1;T) = T^2/2 exactly
  RegPolynomial t11s = regularize({1, 1}, RegSide::Shuffle);
  CHECK(t11s.coeff[2].terms.at({}) == Rational(1, 2));
  CHECK(t11s.coeff[0].terms.empty());
  // admissible words are constants
  RegPolynomial z2 = regularize({2}, RegSide::Stuffle);
  CHECK(z2.degree() == 0);
  CHECK(z2.coeff[0].terms.at({2}) == 1);
  CHECK(regularize({1, 2}, RegSide::Stuffle).degree() == 0);
  CHECK(regularize({1, 1, 2}, RegSide::Shuffle).degree() == 0);
  CHECK_THROWS(regularize({0, 2}, RegSide::Stuffle));
}

TEST_CASE("divergent words acquire the expected T-degree") {
  for (int m = 1; m <= 4; ++m) {
    ZWord w{2};
    for (int i = 0; i < m; ++i) w.push_back(1);
    CHECK(regularize(w, RegSide::Stuffle).degree() == m);
    CHECK(regularize(w, RegSide::Shuffle).degree() == m);
  }
}
