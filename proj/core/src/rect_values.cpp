#include "nvs/rect_values.hpp"

#include <functional>
#include <stdexcept>

#include "nvs/matrix.hpp"

namespace nvs {

HP zagier_232(int a, int c, const ZetaTable& zt) {
  if (a < 0 || c < 0) throw std::invalid_argument("negative repetition");
  HP acc(0L);
  for (int r = 1; r <= a + c + 1; ++r) {
    HP pow2 = HP(2L).pow_int(-2L * r);
    HP bracket = binomial_hp(2 * r, 2 * a + 2) -
                 (HP(1L) - pow2) * binomial_hp(2 * r, 2 * c + 1);
    HP term = bracket * zt.eta(a + c - r + 1) * zt.zeta(2 * r + 1);
    acc += (r % 2 == 0) ? term : -term;
  }
  return HP(2L) * acc;
}

HP explicit_121_stuffle(int a, int c, const ZetaTable& zt) {
  HP acc(0L);
  for (int s = 0; s <= c; ++s)
    acc += binomial_hp(a + c - s + 1, c - s) * zt.zeta(a + c - s + 2) *
           zt.c_coeff(s);
  return (c % 2 == 0) ? acc : -acc;
}

HP explicit_121_shuffle(int a, int c, const ZetaTable& zt) {
  HP v = binomial_hp(a + c + 1, c) * zt.zeta(a + c + 2);
  return (c % 2 == 0) ? v : -v;
}

std::vector<HP> zsh_121_coeffs(int a, int c, const ZetaTable& zt) {
  std::vector<HP> out(static_cast<std::size_t>(c) + 1, HP(0L));
  Rational kfact(1);
  for (int k = 0; k <= c; ++k) {
    if (k > 0) kfact *= k;
    HP term = binomial_hp(a + c - k + 1, c - k) * zt.zeta(a + c + 2 - k) /
              HP(kfact);
    out[static_cast<std::size_t>(k)] = ((c - k) % 2 == 0) ? term : -term;
  }
  return out;
}

namespace {

bool match_aba(const ZWord& w, int lo, int hi, int* a, int* c) {
  // ({lo}^a, hi, {lo}^c) with hi = lo + 1
  int i = 0, n = static_cast<int>(w.size());
  while (i < n && w[static_cast<std::size_t>(i)] == lo) ++i;
  if (i >= n || w[static_cast<std::size_t>(i)] != hi) return false;
  int j = i + 1;
  while (j < n && w[static_cast<std::size_t>(j)] == lo) ++j;
  if (j != n) return false;
  *a = i;
  *c = n - i - 1;
  return true;
}

}  // namespace

HP zstar_value(const ZWord& word, const ZetaTable& zt, MzvEngine& engine) {
  if (word.empty()) return HP(1L);
  int a = 0, c = 0;
  if (match_aba(word, 1, 2, &a, &c)) return explicit_121_stuffle(a, c, zt);
  if (match_aba(word, 2, 3, &a, &c)) return zagier_232(a, c, zt);
  if (is_admissible(word)) return engine.zeta(word);
  RegPolynomial reg = regularize(word, RegSide::Stuffle);
  return engine.eval_combo(reg.coeff.empty() ? std::map<ZWord, Rational>{}
                                             : reg.coeff[0].terms);
}

RectangleValue rectangle_value(int m, int p, int q, int alpha, int beta,
                               int gamma, const ZetaTable& zt,
                               MzvEngine& engine) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative rectangle");
  RectangleValue out;
  out.m = m;
  out.p = p;
  out.q = q;
  out.alpha = alpha;
  out.beta = beta;
  out.gamma = gamma;
  if (p == 0 || q == 0) {
    out.value = HP(1L);
    out.route = "empty";
    return out;
  }
  DiagIndex idx = DiagIndex::three_zone(alpha, beta, gamma);
  Matrix<HP> g(static_cast<std::size_t>(q), static_cast<std::size_t>(q));
  for (int i = 1; i <= q; ++i)
    for (int j = 1; j <= q; ++j) {
      int k = p - i + j;
      if (k < 0)
        g(i - 1, j - 1) = HP(0L);
      else if (k == 0)
        g(i - 1, j - 1) = HP(1L);
      else
        g(i - 1, j - 1) = zstar_value(column_word(idx, m + j - 1, k), zt, engine);
    }
  out.value = det_cofactor(g);
  out.route = "dual-jacobi-trudi";
  return out;
}

HP prop_121_determinant(int a, int b, int c, const ZetaTable& zt) {
  if (b < 1) throw std::invalid_argument("b >= 1");
  std::vector<int> t(static_cast<std::size_t>(b), 0);
  auto bound = [&](int i) { return c + b - (i + 1); };  // t_{i+1} <= c+b-i-1
  HP total(0L);
  while (true) {
    HP coef(1L);
    for (int i = 0; i < b; ++i) coef *= zt.c_coeff(t[static_cast<std::size_t>(i)]);
    if (!coef.is_zero()) {
      Matrix<HP> m(static_cast<std::size_t>(b), static_cast<std::size_t>(b));
      for (int i = 1; i <= b; ++i)
        for (int j = 1; j <= b; ++j) {
          int ti = t[static_cast<std::size_t>(i - 1)];
          long top = a + b + c - i + j - ti;
          m(i - 1, j - 1) = binomial_hp(top, b + c - i - ti) *
                            zt.zeta(static_cast<int>(top) + 1);
        }
      total += coef * det_cofactor(m);
    }
    int pos = b - 1;
    while (pos >= 0 && t[static_cast<std::size_t>(pos)] == bound(pos)) --pos;
    if (pos < 0) break;
    ++t[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < b; ++i) t[static_cast<std::size_t>(i)] = 0;
  }
  long e = static_cast<long>(b) * c + static_cast<long>(b) * (b - 1) / 2;
  return (e % 2 == 0) ? total : -total;
}

HP r33_closed_121(const ZetaTable& zt) {
  const HP &z2 = zt.zeta(2), &z3 = zt.zeta(3), &z4 = zt.zeta(4),
           &z5 = zt.zeta(5), &z6 = zt.zeta(6);
  return HP(-9L) * z4 * z4 * z4 - HP(24L) * z2 * z5 * z5 -
         HP(20L) * z3 * z3 * z6 + HP(30L) * z2 * z4 * z6 +
         HP(24L) * z3 * z4 * z5;
}

HP r33_closed_232(const ZetaTable& zt) {
  const HP &z3 = zt.zeta(3), &z5 = zt.zeta(5), &z7 = zt.zeta(7),
           &z9 = zt.zeta(9), &z11 = zt.zeta(11);
  const HP &e1 = zt.eta(1), &e2 = zt.eta(2);
  auto q = [](long n, long d) { return HP(rat(n, d)); };
  HP acc(0L);
  acc += q(-801675, 1024) * z3 * z7 * z11;
  acc += q(-1058211, 512) * z5 * z5 * z11;
  acc += q(160335, 64) * e1 * z3 * z5 * z11;
  acc += q(-32067, 64) * e1 * e1 * z3 * z3 * z11;
  acc += q(-404495, 256) * z3 * z9 * z9;
  acc += q(1101387, 256) * z5 * z7 * z9;
  acc += q(483, 4) * e1 * z3 * z7 * z9;
  acc += q(-21315, 16) * e1 * z5 * z5 * z9;
  acc += q(-777, 8) * e2 * z3 * z5 * z9;
  acc += q(-1491, 16) * e1 * e1 * z3 * z5 * z9;
  acc += q(-651, 4) * e1 * e2 * z3 * z3 * z9;
  acc += q(2667, 8) * e1 * e1 * e1 * z3 * z3 * z9;
  acc += q(-3426525, 2048) * z7 * z7 * z7;
  acc += q(54873, 128) * e1 * z5 * z7 * z7;
  acc += q(-1575, 2) * e2 * z3 * z7 * z7;
  acc += q(128331, 128) * e1 * e1 * z3 * z7 * z7;
  acc += q(6705, 16) * e2 * z5 * z5 * z7;
  acc += q(-6219, 16) * e1 * e1 * z5 * z5 * z7;
  acc += q(6849, 8) * e1 * e2 * z3 * z5 * z7;
  acc += q(-17163, 16) * e1 * e1 * e1 * z3 * z5 * z7;
  acc += q(-225, 4) * e2 * e2 * z3 * z3 * z7;
  acc += q(225, 4) * e1 * e1 * e2 * z3 * z3 * z7;
  acc += q(-855, 2) * e1 * e2 * z5 * z5 * z5;
  acc += q(495, 1) * e1 * e1 * e1 * z5 * z5 * z5;
  acc += q(81, 2) * e2 * e2 * z3 * z5 * z5;
  acc += q(-81, 2) * e1 * e1 * e2 * z3 * z5 * z5;
  return acc;
}

HP r_a2_2_closed(int a, const ZetaTable& zt) {
  return HP(-(a + 2L)) * zt.zeta(a + 3) * zt.zeta(a + 3) +
         HP(a + 3L) * zt.zeta(a + 2) * zt.zeta(a + 4);
}

HP r_a3_2_closed(int a, const ZetaTable& zt) {
  return -HP(a + 3L) * binomial_hp(a + 3, 2) * zt.zeta(a + 4) * zt.zeta(a + 4) +
         HP(a + 2L) * binomial_hp(a + 4, 2) * zt.zeta(a + 3) * zt.zeta(a + 5) +
         HP(rat(a + 3, 2)) * zt.zeta(2) * zt.zeta(a + 2) * zt.zeta(a + 4) -
         HP(rat(a + 2, 2)) * zt.zeta(2) * zt.zeta(a + 3) * zt.zeta(a + 3);
}

HP r_a3_3_closed(int a, const ZetaTable& zt) {
  return -HP(a + 3L) * binomial_hp(a + 3, 2) * zt.zeta(a + 4).pow_int(3) -
         HP(a + 4L) * binomial_hp(a + 4, 2) * zt.zeta(a + 2) * zt.zeta(a + 5) *
             zt.zeta(a + 5) -
         HP(a + 2L) * binomial_hp(a + 5, 2) * zt.zeta(a + 3) * zt.zeta(a + 3) *
             zt.zeta(a + 6) +
         HP(3L) * binomial_hp(a + 5, 3) * zt.zeta(a + 2) * zt.zeta(a + 4) *
             zt.zeta(a + 6) +
         HP(6L) * binomial_hp(a + 4, 3) * zt.zeta(a + 3) * zt.zeta(a + 4) *
             zt.zeta(a + 5);
}

namespace {

// R^{(0)}_{3,3} assembled from single-column initial values R^{(m)}_{p,1}.
HP r33_from_initials(const std::function<HP(int, int)>& r_p1) {
  auto r = [&](int m, int p) { return r_p1(m, p); };
  return r(0, 3) * r(1, 3) * r(2, 3) + r(0, 2) * r(1, 2) * r(2, 5) +
         r(0, 1) * r(1, 4) * r(2, 4) - r(0, 3) * r(1, 2) * r(2, 4) -
         r(0, 2) * r(1, 4) * r(2, 3) - r(0, 1) * r(1, 3) * r(2, 5);
}

}  // namespace

HP r33_residual_232(const ZetaTable& zt) {
  HP det_route = r33_from_initials(
      [&](int m, int p) { return zagier_232(m, p - m - 1, zt); });
  return (det_route - r33_closed_232(zt)).abs();
}

HP r33_residual_121(const ZetaTable& zt) {
  HP det_route = r33_from_initials(
      [&](int m, int p) { return explicit_121_stuffle(m, p - m - 1, zt); });
  return (det_route - r33_closed_121(zt)).abs();
}

std::pair<HP, HP> checkerboard_residuals(int c, const ZetaTable& zt,
                                         MzvEngine& engine) {
  auto zstar_2s = [&](int k) {  // zeta*({2}^k) = 2(1 - 2^{1-2k}) zeta(2k)
    if (k == 0) return HP(1L);
    return HP(2L) * (HP(1L) - HP(2L).pow_int(1 - 2 * k)) * zt.zeta(2 * k);
  };
  auto zstar_12s = [&](int k) {  // zeta*(1,{2}^k) = 2 zeta(2k+1)
    return HP(2L) * zt.zeta(2 * k + 1);
  };
  auto zstar_1odd = [&](int k) {  // zeta*(1, k) by tail-corrected summation
    return engine.zeta_star(ZWord{1, k});
  };
  auto zstar_112s = [&](int k) {  // zeta*({1}^2,{2}^k) = 4 zeta*(1,2k+1) - 2 zeta(2k+2)
    return HP(4L) * zstar_1odd(2 * k + 1) - HP(2L) * zt.zeta(2 * k + 2);
  };
  // R^{(m)}_{2,q} = R^{(m-1)}_{1,q} R^{(m)}_{1,q} - R^{(m-1)}_{1,q+1} R^{(m)}_{1,q-1}
  int q1 = c + 2;
  HP first = zstar_12s(q1 - 1) * zstar_2s(q1) - zstar_12s(q1) * zstar_2s(q1 - 1);
  HP first_closed =
      HP(4L) * (HP(1L) - HP(2L).pow_int(-2 * c - 3)) * zt.zeta(2 * c + 3) *
          zt.zeta(2 * c + 4) -
      HP(4L) * (HP(1L) - HP(2L).pow_int(-2 * c - 1)) * zt.zeta(2 * c + 2) *
          zt.zeta(2 * c + 5);
  int q2 = c + 3;
  HP second = zstar_112s(q2 - 2) * zstar_12s(q2 - 1) -
              zstar_112s(q2 - 1) * zstar_12s(q2 - 2);
  HP second_closed =
      HP(8L) * (zstar_1odd(2 * c + 3) * zt.zeta(2 * c + 5) -
                zstar_1odd(2 * c + 5) * zt.zeta(2 * c + 3)) -
      HP(4L) * (zt.zeta(2 * c + 4) * zt.zeta(2 * c + 5) -
                zt.zeta(2 * c + 3) * zt.zeta(2 * c + 6));
  return {(first - first_closed).abs(), (second - second_closed).abs()};
}

}  // namespace nvs
