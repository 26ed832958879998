#include <doctest.h>

#include "nvs/genfun.hpp"
#include "nvs/mzv_num.hpp"
#include "nvs/rect_values.hpp"
#include "nvs/schur_zeta.hpp"
#include "nvs/zeta_trunc.hpp"

using namespace nvs;

namespace {

bool close(const HP& a, const HP& b, int digits) {
  return (a - b).abs() < HP(1L) / HP(10L).pow_int(digits);
}

MzvEngine& engine() {
  static MzvEngine e(2000, 8);
  return e;
}

}  // namespace

TEST_CASE("truncated sums") {
  CHECK(zeta_trunc({2}, 3, false) == rat(49, 36));
  CHECK(zeta_trunc({1, 2}, 2, true) == rat(11, 8));
  CHECK(zeta_trunc({3, 1}, 0, false) == 0);
  CHECK(zeta_trunc({}, 5, false) == 1);
  CHECK(close(zeta_trunc_hp({2}, 3, false), HP(rat(49, 36)), 30));
}

TEST_CASE("engine reproduces classical values") {
  const ZetaTable& zt = default_zeta_table();
  CHECK(close(engine().zeta({2}), zt.zeta(2), 30));
  // Euler: zeta(1,2) = zeta(3) in the increasing-index convention
  CHECK(close(engine().zeta({1, 2}), zt.zeta(3), 25));
  // duality shortcut zeta({1}^l, 2) = zeta(l + 2)
  for (int l = 1; l <= 4; ++l) {
    ZWord w(static_cast<std::size_t>(l), 1);
    w.push_back(2);
    CHECK(close(engine().zeta(w), zt.zeta(l + 2), 20));
  }
  // eta values against the closed cache
  CHECK(close(engine().zeta({2, 2}), zt.eta(2), 25));
  CHECK(close(engine().zeta({2, 2, 2}), zt.eta(3), 25));
  // star merge: zeta*(2,2) = zeta(2,2) + zeta(4)
  CHECK(close(engine().zeta_star({2, 2}), zt.eta(2) + zt.zeta(4), 25));
  CHECK_THROWS(engine().zeta({2, 1}));
}

TEST_CASE("asymptotic polynomial at the harmonic word") {
  // P0 for (1) is log n + gamma: Z*((1); T) = T
  HP t(rat(7, 2));
  CHECK(close(engine().zstar_at({1}, t), t, 25));
  // |H_M - (log M + gamma)| decreases like 1/M
  auto res = asymptotic_residuals({1}, {100L, 1000L, 10000L}, engine());
  CHECK(res[1] < res[0]);
  CHECK(res[2] < res[1]);
  CHECK(res[2] < HP(rat(1, 10000)));
}

TEST_CASE("zagier evaluation") {
  const ZetaTable& zt = default_zeta_table();
  CHECK(close(zagier_232(0, 0, zt), zt.zeta(3), 35));
  CHECK(close(zagier_232(1, 0, zt), engine().zeta({2, 3}), 20));
  CHECK(close(zagier_232(0, 1, zt), engine().zeta({3, 2}), 20));
}

TEST_CASE("C coefficients") {
  const ZetaTable& zt = default_zeta_table();
  CHECK(close(zt.c_coeff(0), HP(1L), 35));
  CHECK(zt.c_coeff(1).is_zero());
  CHECK(close(zt.c_coeff(2), -zt.zeta(2) / HP(2L), 35));
  for (int s = 2; s <= 6; ++s)
    CHECK(close(zt.c_coeff(s), zt.c_by_partition_sum(s), 35));
}

TEST_CASE("explicit regularized values at depth (a, 2, c)") {
  const ZetaTable& zt = default_zeta_table();
  CHECK(close(explicit_121_stuffle(0, 0, zt), zt.zeta(2), 35));
  CHECK(close(explicit_121_shuffle(0, 0, zt), zt.zeta(2), 35));
  // coefficient table of Z^sh({1}^a,2,{1}^c; T) evaluated at T = 0
  auto coeffs = zsh_121_coeffs(1, 1, zt);
  CHECK(close(coeffs[0], explicit_121_shuffle(1, 1, zt), 35));
  // cross-check against the word-algebra elimination
  RegPolynomial st = regularize({1, 2, 1}, RegSide::Stuffle);
  CHECK(close(engine().eval_regpoly(st, HP(0L)),
              explicit_121_stuffle(1, 1, zt), 10));
}

TEST_CASE("schur zeta truncations") {
  DiagIndex idx = DiagIndex::three_zone(1, 2, 1);
  // single row is zeta-star, single column is the plain series
  CHECK(schur_zeta_ssyt(SkewShape::parse("3"), idx, 7) ==
        zeta_trunc(row_word(idx, 0, 3), 7, true));
  CHECK(schur_zeta_ssyt(SkewShape::parse("1,1,1"), idx, 7) ==
        zeta_trunc(column_word(idx, 0, 3), 7, false));
  CHECK(schur_zeta_ssyt(SkewShape::parse("2,1"), idx, 5) ==
        schur_zeta_det(SkewShape::parse("2,1"), idx, 5));
  DiagIndex all2 = DiagIndex::three_zone(2, 2, 2);
  CHECK(schur_zeta_ssyt(SkewShape::parse("2,2/1"), all2, 9) ==
        schur_zeta_det(SkewShape::parse("2,2/1"), all2, 9));
  // explicit tableau entries: shape (1,1) with (1,2) is zeta^M(1,2)
  CHECK(schur_zeta_ssyt_entries(SkewShape::parse("1,1"), {1, 2}, 100) ==
        zeta_trunc({1, 2}, 100, false));
  CHECK_THROWS(schur_zeta_ssyt_entries(SkewShape::parse("2,1"), {1, 2}, 5));
  // table-backed diagonal index rejects uncovered contents
  DiagIndex table = DiagIndex::table({{0, 2}, {1, 2}});
  CHECK_THROWS(schur_zeta_ssyt(SkewShape::parse("2,1"), table, 3));
}

TEST_CASE("rectangle values") {
  const ZetaTable& zt = default_zeta_table();
  CHECK(rectangle_value(0, 0, 3, 1, 2, 1, zt, engine()).value == HP(1L));
  CHECK(rectangle_value(2, 3, 0, 1, 2, 1, zt, engine()).value == HP(1L));
  for (int a = 0; a <= 4; ++a)
    CHECK(close(rectangle_value(a, a + 2, 2, 1, 2, 1, zt, engine()).value,
                r_a2_2_closed(a, zt), 10));
  CHECK(close(r33_residual_121(zt), HP(0L), 10));
  CHECK(close(r33_residual_232(zt), HP(0L), 10));
  CHECK(close(prop_121_determinant(0, 1, 2, zt), explicit_121_stuffle(0, 2, zt),
              10));
  // value grid entries with p >= q agree with the proposition determinant
  for (int p = 1; p <= 3; ++p)
    for (int q = 1; q <= p; ++q)
      CHECK(close(rectangle_value(0, p, q, 1, 2, 1, zt, engine()).value,
                  prop_121_determinant(0, q, p - q, zt), 10));
  // generic three-zone route goes through the word algebra
  RectangleValue generic = rectangle_value(0, 2, 1, 1, 3, 2, zt, engine());
  // single column (3, 2 read downward from the diagonal): zeta(3, 2)? the
  // column word is (beta, gamma) = (3, 2) top-down, i.e. zeta(3, 2)
  CHECK(close(generic.value, engine().zeta({3, 2}), 10));
}

TEST_CASE("generating function spot values") {
  const ZetaTable& zt = default_zeta_table();
  BivarTable f = genfun_F_closed_121(3, zt);
  CHECK(close(f.at(0, 0), zt.zeta(2), 12));
  CHECK(close(f.at(0, 1), -HP(2L) * zt.zeta(3), 12));
  CHECK(close(genfun_F_max_diff(5, zt), HP(0L), 10));
  CHECK(close(genfun_product_residual_b2(0, 1, 1, 0, 3, zt), HP(0L), 8));
  CHECK(close(phi_series_residual(2, 4, zt), HP(0L), 8));
  CHECK_THROWS(phi_series_residual(4, 2, zt));
  // generic table route agrees with the dedicated (1,2,1) table and with
  // the convergent closed form for (2,3,2)
  BivarTable g121 = genfun_F_table(1, 2, 1, 2, zt, engine());
  for (int a = 0; a <= 2; ++a)
    for (int c = 0; c <= 2; ++c)
      CHECK(close(g121.at(a, c), explicit_121_stuffle(a, c, zt), 12));
  BivarTable g232 = genfun_F_table(2, 3, 2, 2, zt, engine());
  CHECK(close(g232.at(1, 1), zagier_232(1, 1, zt), 12));
}

TEST_CASE("checkerboard residuals stay within tolerance") {
  const ZetaTable& zt = default_zeta_table();
  for (int c = 0; c <= 3; ++c) {
    auto [r1, r2] = checkerboard_residuals(c, zt, engine());
    CHECK(r1 < HP(1L) / HP(10L).pow_int(8));
    CHECK(r2 < HP(1L) / HP(10L).pow_int(8));
  }
}
