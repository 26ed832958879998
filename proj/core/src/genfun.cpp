#include "nvs/genfun.hpp"

#include <stdexcept>

namespace nvs {

namespace {

HP z121(int a, int c, const ZetaTable& zt) {
  if (a < 0 || c < 0) return HP(0L);
  return explicit_121_stuffle(a, c, zt);
}

}  // namespace

BivarTable genfun_F_closed_121(int deg, const ZetaTable& zt) {
  // x F(x,z) = -(psi(z-x+1) - psi(z+1)) / A(z)
  std::size_t dlen = 2 * static_cast<std::size_t>(deg) + 2;
  Series d = zt.digamma1_series(dlen);
  const Series& ainv = zt.a_inv_series();
  BivarTable num(deg + 1);  // coefficient of x^a z^c of the numerator
  for (int a = 1; a <= deg + 1; ++a)
    for (int c = 0; a + c <= 2 * deg + 1 && c <= deg + 1; ++c) {
      std::size_t j = static_cast<std::size_t>(a + c);
      if (j >= d.size()) continue;
      HP v = HP(binomial_rat(a + c, a)) * d[j];
      num.at(a, c) = (a % 2 == 0) ? -v : v;  // (-1)^{a+1} C(a+c,a) d_{a+c}
    }
  BivarTable f(deg);
  for (int a = 0; a <= deg; ++a)
    for (int c = 0; c <= deg; ++c) {
      HP acc(0L);
      for (int c2 = 0; c2 <= c && c2 < static_cast<int>(ainv.size()); ++c2)
        acc += num.at(a + 1, c - c2) * ainv[static_cast<std::size_t>(c2)];
      f.at(a, c) = acc;
    }
  return f;
}

BivarTable genfun_F_table_121(int deg, const ZetaTable& zt) {
  BivarTable f(deg);
  for (int a = 0; a <= deg; ++a)
    for (int c = 0; c <= deg; ++c) f.at(a, c) = z121(a, c, zt);
  return f;
}

BivarTable genfun_F_table(int alpha, int beta, int gamma, int deg,
                          const ZetaTable& zt, MzvEngine& engine) {
  BivarTable f(deg);
  for (int a = 0; a <= deg; ++a)
    for (int c = 0; c <= deg; ++c) {
      ZWord w(static_cast<std::size_t>(a), alpha);
      w.push_back(beta);
      for (int i = 0; i < c; ++i) w.push_back(gamma);
      f.at(a, c) = zstar_value(w, zt, engine);
    }
  return f;
}

HP genfun_F_max_diff(int deg, const ZetaTable& zt) {
  BivarTable closed = genfun_F_closed_121(deg, zt);
  BivarTable table = genfun_F_table_121(deg, zt);
  HP worst(0L);
  for (int a = 0; a <= deg; ++a)
    for (int c = 0; c <= deg; ++c) {
      HP diff = (closed.at(a, c) - table.at(a, c)).abs();
      if (worst < diff) worst = diff;
    }
  return worst;
}

HP genfun_product_residual_b2(int k1, int k2, int l1, int l2, int deg,
                              const ZetaTable& zt) {
  HP worst(0L);
  for (int A = 0; A <= deg; ++A)
    for (int C = 0; A + C <= deg; ++C) {
      // left side: coefficient of x^{a+k2} z^{c+l2}
      HP lhs(0L);
      int a = A - k2, c = C - l2;
      if (a >= 0 && c >= 0)
        lhs = z121(a + k1, c + l1, zt) * z121(a + k2, c + l2, zt);
      // right side: residue of F(x2,z2) x2^{k2-k1-1} z2^{l2-l1-1} F(x/x2,z/z2)
      // x2 exponent a1 + (k2-k1-1) - a2 = -1, z2: c1 + (l2-l1-1) - c2 = -1
      int a1 = A + k1 - k2, c1 = C + l1 - l2;  // forced by a2 = A, c2 = C
      HP rhs = z121(a1, c1, zt) * z121(A, C, zt);
      HP diff = (lhs - rhs).abs();
      if (worst < diff) worst = diff;
    }
  return worst;
}

HP phi_series_residual(int b, int deg, const ZetaTable& zt) {
  if (b != 2 && b != 3) throw std::invalid_argument("b must be 2 or 3");
  int range = deg + 6;
  auto Z = [&](int a, int c) { return z121(a, c, zt); };
  BivarTable lhs(deg), rhs(deg);
  if (b == 2) {
    // Phi_2 = x * sum R^{(a)}_{a+2+c,2} x^a z^c
    for (int A = 1; A <= deg; ++A)
      for (int C = 0; A + C <= deg; ++C)
        lhs.at(A, C) = prop_121_determinant(A - 1, 2, C, zt);
    // integrand monomials of (x2^2 - x) x2^{-2} z2^{-2}: (xpow, e2, sign)
    struct Mono {
      int xpow, e2, sign;
    };
    const Mono monos[] = {{0, 0, +1}, {1, -2, -1}};
    for (const Mono& mo : monos)
      for (int a1 = 0; a1 <= range; ++a1)
        for (int c1 = 1; c1 <= range; ++c1) {
          int a2 = a1 + mo.e2 + 1, c2 = c1 - 1;
          if (a2 < 0) continue;
          int A = mo.xpow + a2, C = c2;
          if (A > deg || C > deg || A + C > deg) continue;
          HP term = Z(a1, c1) * Z(a2, c2);
          rhs.at(A, C) += (mo.sign > 0) ? term : -term;
        }
  } else {
    // Phi_3 = x^3 z * sum R^{(a)}_{a+3+c,3} x^{2a} z^{2c}
    for (int a = 0; 3 + 2 * a <= deg; ++a)
      for (int c = 0; 3 + 2 * a + 1 + 2 * c <= deg; ++c)
        lhs.at(3 + 2 * a, 1 + 2 * c) = prop_121_determinant(a, 3, c, zt);
    // (x3 - x2)(X x2 - x)(X x3 - x) X^{-3} with X = x2 x3 expands to
    // x3 - x2 - x x2^{-2} + x x3^{-2} + x^2 x2^{-3} x3^{-2} - x^2 x2^{-2} x3^{-3}
    struct Mono {
      int xpow, e2, e3, sign;
    };
    const Mono monos[] = {{0, 0, 1, +1},   {0, 1, 0, -1},
                          {1, -2, 0, -1},  {1, 0, -2, +1},
                          {2, -3, -2, +1}, {2, -2, -3, -1}};
    for (const Mono& mo : monos)
      for (int a1 = 0; a1 <= range; ++a1)
        for (int c1 = 2; c1 <= range; ++c1) {
          int a2 = a1 + mo.e2 + 1, a3 = a1 + mo.e3 + 1;
          int c2 = c1 - 1, c3 = c1 - 2;
          if (a2 < 0 || a3 < 0) continue;
          int A = mo.xpow + a2 + a3, C = c2 + c3;
          if (A > deg || C > deg || A + C > deg) continue;
          HP term = Z(a1, c1) * Z(a2, c2) * Z(a3, c3);
          rhs.at(A, C) += (mo.sign > 0) ? term : -term;
        }
  }
  HP worst(0L);
  for (int A = 0; A <= deg; ++A)
    for (int C = 0; A + C <= deg; ++C) {
      HP diff = (lhs.at(A, C) - rhs.at(A, C)).abs();
      if (worst < diff) worst = diff;
    }
  return worst;
}

}  // namespace nvs
