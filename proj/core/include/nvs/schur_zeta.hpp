#pragma once

#include <map>
#include <string>
#include <vector>

#include "nvs/hp.hpp"
#include "nvs/partition.hpp"
#include "nvs/rational.hpp"
#include "nvs/ssyt.hpp"
#include "nvs/zeta_trunc.hpp"

namespace nvs {

// Diagonally constant index: one exponent per content, either the
// three-zone pattern (alpha above, beta on, gamma below the diagonal)
// or an explicit table over a declared content range.
class DiagIndex {
 public:
  static DiagIndex three_zone(int alpha, int beta, int gamma);
  static DiagIndex table(std::map<int, int> values);

  int at(int content) const;     // throws outside a table's range
  DiagIndex shifted(int m) const;  // tau^m: entry(c) = this(c + m)

  std::string str() const;

 private:
  bool zones_ = true;
  int alpha_ = 1, beta_ = 2, gamma_ = 1;
  int shift_ = 0;
  std::map<int, int> table_;
};

// Exponent along a one-row shape starting at content c0: the zeta-star word.
ZWord row_word(const DiagIndex& idx, int c0, int len);
// Exponent down a one-column shape starting at content c0 (descending).
ZWord column_word(const DiagIndex& idx, int c0, int len);

// M-truncated Schur multiple zeta value, tableau-sum route (exact).
Rational schur_zeta_ssyt(const SkewShape& shape, const DiagIndex& idx, long M);
// Arbitrary (non-diagonal) index tableau: entries parallel to shape.cells().
Rational schur_zeta_ssyt_entries(const SkewShape& shape,
                                 const std::vector<int>& entries, long M);

// Determinant route for diagonal indices: det of truncated zeta-star
// row values through the Jacobi-Trudi identification (exact).
Rational schur_zeta_det(const SkewShape& shape, const DiagIndex& idx, long M);
// Same determinant in floating point, for large M.
HP schur_zeta_det_hp(const SkewShape& shape, const DiagIndex& idx, long M);

struct CorollaryCheck {
  std::string id;
  bool pass = false;
};

// Finite-M instances of the Schur-zeta corollaries: the skew Giambelli
// determinant, the Desnanot-Jacobi pair, and the corner-exchange sums.
CorollaryCheck zeta_giambelli_check(const SkewShape& shape,
                                    const DiagIndex& idx, long M);
CorollaryCheck zeta_dj_check(const SkewShape& shape, const DiagIndex& idx,
                             long M, bool h_variant);
CorollaryCheck zeta_plucker_check(const Partition& lambda, int d,
                                  const DiagIndex& idx, long M,
                                  bool row_variant);

}  // namespace nvs
