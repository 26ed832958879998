#pragma once

#include <vector>

#include "nvs/rect_values.hpp"
#include "nvs/zeta_tables.hpp"

namespace nvs {

// Table of bivariate series coefficients, v[a][c] multiplying x^a z^c.
struct BivarTable {
  int deg = 0;
  std::vector<std::vector<HP>> v;
  explicit BivarTable(int d)
      : deg(d),
        v(static_cast<std::size_t>(d) + 1,
          std::vector<HP>(static_cast<std::size_t>(d) + 1, HP(0L))) {}
  HP& at(int a, int c) { return v[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)]; }
  const HP& at(int a, int c) const {
    return v[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
  }
};

// F(1,2,1; x,z) = sum zeta*({1}^a, 2, {1}^c) x^a z^c, two routes:
// the digamma/gamma closed form expanded as a series, and the value table.
BivarTable genfun_F_closed_121(int deg, const ZetaTable& zt);
BivarTable genfun_F_table_121(int deg, const ZetaTable& zt);
HP genfun_F_max_diff(int deg, const ZetaTable& zt);

// Generic coefficient table of F(alpha,beta,gamma; x,z); regularized
// values where the words diverge.
BivarTable genfun_F_table(int alpha, int beta, int gamma, int deg,
                          const ZetaTable& zt, MzvEngine& engine);

// Coefficientwise residual of the 2-factor product lemma at the given
// offsets: both sides up to total degree deg.
HP genfun_product_residual_b2(int k1, int k2, int l1, int l2, int deg,
                              const ZetaTable& zt);

// Residual of the generating-function identity for Phi_b, b in {2,3},
// with (alpha,beta,gamma) = (1,2,1): left side the direct R-value series,
// right side the contour integrals taken as formal residues on truncated
// Laurent expansions of F.
HP phi_series_residual(int b, int deg, const ZetaTable& zt);

}  // namespace nvs
