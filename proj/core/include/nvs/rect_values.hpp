#pragma once

#include <string>

#include "nvs/mzv_num.hpp"
#include "nvs/schur_zeta.hpp"
#include "nvs/zeta_tables.hpp"

namespace nvs {

// zeta({2}^a, 3, {2}^c) as the eta/zeta(odd) double combination.
HP zagier_232(int a, int c, const ZetaTable& zt);

// zeta^*({1}^a, 2, {1}^c): closed forms of the two regularizations at T=0.
HP explicit_121_stuffle(int a, int c, const ZetaTable& zt);
HP explicit_121_shuffle(int a, int c, const ZetaTable& zt);
// Full shuffle-regularized polynomial Z^sh({1}^a,2,{1}^c; T) coefficients.
std::vector<HP> zsh_121_coeffs(int a, int c, const ZetaTable& zt);

// Regularized one-column value zeta^*(word) evaluated numerically:
// closed form when the word matches ({1}^a, 2, {1}^c) or ({2}^a, 3, {2}^c),
// word-algebra regularization through the engine otherwise.
HP zstar_value(const ZWord& word, const ZetaTable& zt, MzvEngine& engine);

struct RectangleValue {
  int m = 0, p = 0, q = 0;
  int alpha = 1, beta = 2, gamma = 1;
  HP value;
  std::string route;
};

// R^{(m)}_{p,q}(alpha,beta,gamma): dual Jacobi-Trudi determinant over the
// regularized column values; R = 1 when p = 0 or q = 0.
RectangleValue rectangle_value(int m, int p, int q, int alpha, int beta,
                               int gamma, const ZetaTable& zt,
                               MzvEngine& engine);

// (-1)^{bc + b(b-1)/2} sum over (t_1..t_b) of prod C_{t_i} times the
// binomial-zeta determinant; equals R^{(a)}_{a+b+c,b}(1,2,1).
HP prop_121_determinant(int a, int b, int c, const ZetaTable& zt);

// Displayed closed forms.
HP r33_closed_121(const ZetaTable& zt);
HP r33_closed_232(const ZetaTable& zt);
HP r_a2_2_closed(int a, const ZetaTable& zt);   // R^{(a)}_{a+2,2}(1,2,1)
HP r_a3_2_closed(int a, const ZetaTable& zt);   // R^{(a)}_{a+3,2}(1,2,1)
HP r_a3_3_closed(int a, const ZetaTable& zt);   // R^{(a)}_{a+3,3}(1,2,1)

// |determinant route - closed form| for R^{(0)}_{3,3} at (2,3,2) and (1,2,1).
HP r33_residual_232(const ZetaTable& zt);
HP r33_residual_121(const ZetaTable& zt);

// Horizontal rectangle identities for (2,2,1); returns the two residuals
// |relation route - displayed closed form| for the given c.
std::pair<HP, HP> checkerboard_residuals(int c, const ZetaTable& zt,
                                         MzvEngine& engine);

}  // namespace nvs
