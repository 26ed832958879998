#include <doctest.h>

#include "nvs/identities.hpp"
#include "nvs/matrix.hpp"

using namespace nvs;

namespace {

Matrix<SparsePoly> symbolic_matrix(int rows, int cols, const char* prefix) {
  Matrix<SparsePoly> m(static_cast<std::size_t>(rows),
                       static_cast<std::size_t>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      m(i, j) = SparsePoly::variable(std::string(prefix) + std::to_string(i) +
                                     "_" + std::to_string(j));
  return m;
}

}  // namespace

TEST_CASE("determinants over small matrices") {
  CHECK(det(Matrix<Rational>::identity(4)) == Rational(1));
  SparsePoly a = SparsePoly::variable("a"), b = SparsePoly::variable("b");
  SparsePoly c = SparsePoly::variable("c"), d = SparsePoly::variable("d");
  Matrix<SparsePoly> m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  CHECK(det(m) == a * d - b * c);
}

TEST_CASE("det is multiplicative on random rationals") {
  RationalSampler s(99);
  for (int inst = 0; inst < 5; ++inst) {
    Matrix<Rational> a(5, 5), b(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        a(i, j) = s.next_rational();
        b(i, j) = s.next_rational();
      }
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("fraction-free and cofactor expansions agree") {
  RationalSampler s(7);
  for (int n = 1; n <= 6; ++n) {
    Matrix<Rational> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = s.next_rational();
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
  for (int n = 2; n <= 4; ++n) {
    Matrix<SparsePoly> m = symbolic_matrix(n, n, "t");
    CHECK(det_bareiss(m) == det_cofactor(m));
    CHECK(det_expand(m) == det_cofactor(m));
  }
  for (int n = 5; n <= 6; ++n) {
    Matrix<SparsePoly> m = symbolic_matrix(n, n, "u");
    CHECK(det_bareiss(m) == det_expand(m));
  }
}

TEST_CASE("ordered minors carry orientation") {
  Matrix<SparsePoly> m = symbolic_matrix(3, 3, "m");
  CHECK(minor(m, {1, 2, 3}, {1, 2, 3}) == det(m));
  CHECK(minor(m, {1}, {2}) == m(0, 1));
  SparsePoly straight = minor(m, {1, 2}, {1, 2});
  SparsePoly swapped = minor(m, {2, 1}, {1, 2});
  CHECK(straight == -swapped);
  std::vector<int> seq{3, 1, 2};
  CHECK(sort_sign(seq) == 1);
  std::vector<int> seq2{2, 1};
  CHECK(sort_sign(seq2) == -1);
  CHECK_THROWS(minor(m, {1, 2}, {1}));
}

TEST_CASE("cauchy-binet reduces to multiplicativity at full size") {
  RationalSampler s(3);
  Matrix<Rational> x(3, 3), y(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      x(i, j) = s.next_rational();
      y(i, j) = s.next_rational();
    }
  CHECK(cauchy_binet_residual(x, y, {1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(cauchy_binet_residual(x, y, {2}, {3}) == 0);
}

TEST_CASE("jacobi complement at full index sets") {
  RationalSampler s(5);
  for (int attempt = 0; attempt < 10; ++attempt) {
    Matrix<Rational> x(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) x(i, j) = s.next_rational();
    try {
      CHECK(jacobi_complement_residual(x, {1, 2, 3, 4}, {1, 2, 3, 4}) == 0);
      CHECK(jacobi_complement_residual(x, {1, 3}, {2, 4}) == 0);
      return;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  FAIL("no invertible sample found");
}

TEST_CASE("desnanot-jacobi holds symbolically in 16 indeterminates") {
  Matrix<SparsePoly> z = symbolic_matrix(4, 4, "z");
  CHECK(desnanot_jacobi_residual(z).is_zero());
  Matrix<Rational> diag(3, 3);
  diag(0, 0) = 2;
  diag(1, 1) = 5;
  diag(2, 2) = 7;
  CHECK(desnanot_jacobi_residual(diag) == 0);
  Matrix<Rational> tiny(2, 2);
  CHECK_THROWS(desnanot_jacobi_residual(tiny));
}

TEST_CASE("bazin reduces to a trivial equality at m = 1") {
  RationalSampler s(11);
  Matrix<Rational> z(3, 4);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) z(i, j) = s.next_rational();
  CHECK(bazin_residual(z, {1}, {2}, {3, 4}) == 0);
  Matrix<Rational> z2(3, 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 5; ++j) z2(i, j) = s.next_rational();
  CHECK(bazin_residual(z2, {1, 2}, {3, 4}, {5}) == 0);
}

TEST_CASE("plucker relation on a symbolic 6x3 matrix") {
  Matrix<SparsePoly> z = symbolic_matrix(6, 3, "p");
  // the displayed three-term instance: n = 3, exchange rows (1, 3)
  CHECK(plucker_residual(z, {1, 3}).is_zero());
  // full exchange: two-term identity
  CHECK(plucker_residual(z, {1, 2, 3}).is_zero());
  CHECK_THROWS(plucker_residual(z, {3, 1}));
  CHECK_THROWS(plucker_residual(z, {0, 2}));
}

TEST_CASE("box composition lays out rows L, R, 1..n, 1'..n'") {
  auto a_rule = [](int i, int j) {
    return SparsePoly::variable("A" + std::to_string(i) + std::to_string(j));
  };
  auto b_rule = [](int i, int j) {
    return SparsePoly::variable("B" + std::to_string(i) + std::to_string(j));
  };
  Matrix<SparsePoly> m = box_compose<SparsePoly>(2, a_rule, b_rule);
  REQUIRE(m.rows() == 6);
  REQUIRE(m.cols() == 3);
  CHECK(m(0, 0) == SparsePoly(Rational(1)));  // L row = e_1
  CHECK(m(0, 1).is_zero());
  CHECK(m(0, 2).is_zero());
  CHECK(m(1, 2) == SparsePoly(Rational(1)));  // R row = (-1)^2 e_{n+1}
  CHECK(m(1, 0).is_zero());
  CHECK(m(2, 0) == a_rule(1, 1));
  CHECK(m(2, 1) == a_rule(1, 2));
  CHECK(m(2, 2) == a_rule(1, 3));  // natural extension a_{1,n+1}
  CHECK(m(4, 0) == b_rule(1, 0));  // natural extension b_{1,0}
  CHECK(m(4, 1) == b_rule(1, 1));
  CHECK(m(5, 2) == b_rule(2, 2));
}

TEST_CASE("gauss decomposition and the minor-ratio formulas") {
  Matrix<Rational> upper = Matrix<Rational>::identity(3);
  upper(0, 1) = 4;
  upper(0, 2) = 5;
  upper(1, 2) = 6;
  auto g = gauss_decompose(upper);
  CHECK(g.lower == Matrix<Rational>::identity(3));
  CHECK(g.diagonal == Matrix<Rational>::identity(3));
  CHECK(g.upper == upper);
  RationalSampler s(13);
  int verified = 0;
  for (int attempt = 0; attempt < 40 && verified < 5; ++attempt) {
    Matrix<Rational> x(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) x(i, j) = s.next_rational();
    try {
      CHECK(gauss_minor_formulas_hold(x));
      ++verified;
    } catch (const std::domain_error&) {
      continue;
    }
  }
  CHECK(verified == 5);
}

TEST_CASE("identity verdicts") {
  SparsePoly x = SparsePoly::variable("vx"), y = SparsePoly::variable("vy");
  CHECK(identity_verdict_exact(x, x).kind == VerdictKind::ProvedEqual);
  CHECK(identity_verdict_exact(x * x - y * y, (x - y) * (x + y)).kind ==
        VerdictKind::ProvedEqual);
  Verdict v = identity_verdict_modular(x, y, 19, 20);
  CHECK(v.kind == VerdictKind::Unequal);
  CHECK(v.witness.has_value());
  Verdict ok = identity_verdict_modular(x * x - y * y, (x - y) * (x + y), 19, 20);
  CHECK(ok.passed());
  CHECK(ok.per_trial_bound > 0);
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  RationalSampler s(23);
  SparsePoly x = SparsePoly::variable("ex"), y = SparsePoly::variable("ey");
  SparsePoly p = x * x + y * SparsePoly(Rational(3));
  SparsePoly q = x * y - SparsePoly(Rational(2));
  for (int inst = 0; inst < 20; ++inst) {
    Rational xv = s.next_rational(), yv = s.next_rational();
    auto at = [&](std::uint32_t v) {
      return var_name(v) == "ex" ? xv : yv;
    };
    CHECK((p * q).eval<Rational>(at) == p.eval<Rational>(at) * q.eval<Rational>(at));
    CHECK((p + q).eval<Rational>(at) == p.eval<Rational>(at) + q.eval<Rational>(at));
  }
}

TEST_CASE("exact polynomial division") {
  SparsePoly x = SparsePoly::variable("dx"), y = SparsePoly::variable("dy");
  CHECK((x * x - y * y).exact_div(x - y) == x + y);
  CHECK_THROWS((x * x + y).exact_div(x - y));
  CHECK((x * y * SparsePoly(rat(6))).exact_div(SparsePoly(rat(3))) ==
        x * y * SparsePoly(rat(2)));
}

TEST_CASE("prime field arithmetic matches rationals mod p") {
  RationalSampler s(31);
  for (int inst = 0; inst < 50; ++inst) {
    Rational a = s.next_rational(), b = s.next_nonzero();
    PFElem pa = PFElem::from_rational(a), pb = PFElem::from_rational(b);
    CHECK(PFElem::from_rational(a + b) == pa + pb);
    CHECK(PFElem::from_rational(a * b) == pa * pb);
    CHECK(PFElem::from_rational(a / b) == pa / pb);
  }
  PFElem one(1L);
  CHECK(PFElem(5L).pow(PFElem::modulus() - 1) == one);  // Fermat
}
