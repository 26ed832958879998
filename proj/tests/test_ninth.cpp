#include <doctest.h>

#include <map>

#include "nvs/ninth.hpp"

using namespace nvs;

TEST_CASE("minors of X_+ at the smallest shapes") {
  NinthContext ctx{8, 4};
  SymbolicXPlus x(8);
  CHECK(s_minor(ctx, SkewShape(Partition()), 4, x) == SparsePoly(Rational(1)));
  SkewShape row(Partition({2}));
  CHECK(s_minor(ctx, row, 4, x) == x.gen_h(4, 2));
  // one-column shape: the e-generator, which is also its dual JT entry
  SkewShape col(Partition({1, 1, 1}));
  CHECK(s_minor(ctx, col, 4, x) == x.gen_e(4, 3));
  CHECK(det_expand(dual_jt_matrix(ctx, col, 4, x)) == x.gen_e(4, 3));
}

TEST_CASE("jacobi-trudi entry pattern for (2,2,1)/(1)") {
  NinthContext ctx = make_context(SkewShape::parse("2,2,1/1"));
  SymbolicXPlus x(ctx.N);
  int r = ctx.r;
  Matrix<SparsePoly> h = jt_matrix(ctx, SkewShape::parse("2,2,1/1"), r, x);
  REQUIRE(h.rows() == 3);
  CHECK(h(0, 0) == x.gen_h(r + 1, 1));
  CHECK(h(0, 1) == x.gen_h(r - 1, 3));
  CHECK(h(0, 2) == x.gen_h(r - 2, 4));
  CHECK(h(1, 0) == SparsePoly(Rational(1)));  // h_0
  CHECK(h(1, 1) == x.gen_h(r - 1, 2));
  CHECK(h(1, 2) == x.gen_h(r - 2, 3));
  CHECK(h(2, 0).is_zero());  // h_{-2}
  CHECK(h(2, 1) == SparsePoly(Rational(1)));
  CHECK(h(2, 2) == x.gen_h(r - 2, 1));
}

TEST_CASE("giambelli block layout for (5,5,5,3)/(3,2)") {
  SkewShape shape = SkewShape::parse("5,5,5,3/3,2");
  NinthContext ctx = make_context(shape);
  SymbolicXPlus x(ctx.N);
  int r = ctx.r;
  auto [sign, g] = giambelli_matrix(ctx, shape, r, x);
  REQUIRE(g.rows() == 5);  // p = 3 hooks outer, q = 2 hooks inner
  CHECK(sign == 1);        // (-1)^q with q = 2
  // h block: h^{(r + gamma_j + 1)}_{alpha_i - gamma_j}, gamma = (2, 0)
  CHECK(g(0, 3) == x.gen_h(r + 3, 2));
  CHECK(g(0, 4) == x.gen_h(r + 1, 4));
  CHECK(g(2, 3) == SparsePoly(Rational(1)));  // alpha_3 - gamma_1 = 0 -> h_0
  // e block: e^{(r - delta_i - 1)}_{beta_j - delta_i}, delta = (1, 0)
  CHECK(g(3, 0) == x.gen_e(r - 2, 2));
  CHECK(g(4, 0) == x.gen_e(r - 1, 3));
  // zero block
  CHECK(g(3, 3).is_zero());
  CHECK(g(4, 4).is_zero());
  // hook block corner: S at hook (alpha_1 | beta_1) = (4 | 3)
  Partition hook = from_frobenius({{4}, {3}});
  CHECK(g(0, 0) == s_minor(ctx, SkewShape(hook), r, x));
  // the signed determinant equals the direct minor
  SparsePoly gd = det_expand(g);
  if (sign < 0) gd = -gd;
  CHECK(gd == s_minor(ctx, shape, r, x));
}

TEST_CASE("weyl ratio vanishes for the empty shape") {
  RationalSampler s(3);
  Matrix<Rational> x(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) x(i, j) = s.next_nonzero();
  for (int attempt = 0; attempt < 20; ++attempt) {
    try {
      CHECK(weyl_residual(x, Partition(), 2) == 0);
      CHECK(weyl_residual(x, Partition({1}), 2) == 0);
      return;
    } catch (const std::domain_error&) {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) x(i, j) = s.next_nonzero();
    }
  }
  FAIL("no usable sample");
}

TEST_CASE("U factors multiply out as displayed") {
  std::map<std::pair<int, int>, Rational> vals;
  RationalSampler s(8);
  std::function<Rational(int, int)> u = [&](int t, int k) {
    auto key = std::make_pair(t, k);
    auto it = vals.find(key);
    if (it == vals.end()) it = vals.emplace(key, s.next_nonzero(7, 3)).first;
    return it->second;
  };
  CHECK(build_U<Rational>(4, 0, u) == Matrix<Rational>::identity(4));
  Matrix<Rational> m = build_U<Rational>(3, 1, u);
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == u(1, 1));
  CHECK(m(0, 2) == u(1, 1) * u(2, 1));
  CHECK(m(1, 2) == u(2, 1));
  CHECK(m(1, 0) == 0);
  CHECK(m(2, 1) == 0);
  // products of unitriangular factors stay upper unitriangular
  Matrix<Rational> big = build_U<Rational>(5, 3, u);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(big(i, i) == 1);
    for (std::size_t j = 0; j < i; ++j) CHECK(big(i, j) == 0);
  }
}

TEST_CASE("tableau sums") {
  std::map<std::pair<int, int>, Rational> vals;
  RationalSampler s(21);
  std::function<Rational(int, int)> u = [&](int t, int k) {
    auto key = std::make_pair(t, k);
    auto it = vals.find(key);
    if (it == vals.end()) it = vals.emplace(key, s.next_rational(7, 3)).first;
    return it->second;
  };
  SkewShape shape = SkewShape::parse("2,1");
  NinthContext ctx = make_context(shape);
  CHECK(tableau_sum<Rational>(shape, ctx.r, ctx.N, 0, u) == 0);
  Rational single = tableau_sum<Rational>(SkewShape::parse("1"), ctx.r, ctx.N, 3, u);
  CHECK(single == u(ctx.r, 1) + u(ctx.r, 2) + u(ctx.r, 3));
  Matrix<Rational> um = build_U<Rational>(ctx.N, 3, u);
  CHECK(tableau_sum<Rational>(shape, ctx.r, ctx.N, 3, u) ==
        s_value(um, shape, ctx.r));
  CHECK_THROWS(tableau_sum<Rational>(shape, ctx.N + 2, ctx.N, 1, u));
}

TEST_CASE("vandermonde route equals the tableau polynomial") {
  SkewShape one(Partition({1}));
  SparsePoly x1 = SparsePoly::variable("x1"), x2 = SparsePoly::variable("x2");
  CHECK(vandermonde_specialize(one, 2, 10, 4) == x1 + x2);
  SkewShape two(Partition({2}));
  CHECK(vandermonde_specialize(two, 2, 10, 4) == x1 * x1 + x1 * x2 + x2 * x2);
  SkewShape skew = SkewShape::parse("2,1/1");
  CHECK(vandermonde_specialize(skew, 2, 10, 4) == classical_schur_ssyt(skew, 2));
  CHECK_THROWS(vandermonde_specialize(skew, 2, 10, 2));  // r too small
}

TEST_CASE("generator references outside the context are rejected") {
  SymbolicXPlus x(6);
  CHECK(x.gen_h(2, -3).is_zero());
  CHECK(x.gen_e(2, -1).is_zero());
  CHECK(x.gen_h(2, 0) == SparsePoly(Rational(1)));
  CHECK_THROWS(x.gen_h(3, 5));   // column 8 > N
  CHECK_THROWS(x.gen_e(2, 3));   // d > t
  CHECK_THROWS(x.gen_h(0, 1));
}
