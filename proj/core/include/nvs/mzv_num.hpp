#pragma once

#include <map>
#include <vector>

#include "nvs/hp.hpp"
#include "nvs/words.hpp"

namespace nvs {

// Polynomial in L = log n with HP coefficients.
struct LPoly {
  std::vector<HP> c;
  int degree() const { return static_cast<int>(c.size()) - 1; }
  void add(int j, const HP& v) {
    if (j >= static_cast<int>(c.size()))
      c.resize(static_cast<std::size_t>(j) + 1, HP(0L));
    c[static_cast<std::size_t>(j)] += v;
  }
  HP eval(const HP& L) const {
    HP acc(0L);
    for (std::size_t j = c.size(); j-- > 0;) acc = acc * L + c[j];
    return acc;
  }
};

// Asymptotic expansion sum_i P_i(log n) / n^i, truncated at a fixed order.
struct LogExpansion {
  std::vector<LPoly> p;
  explicit LogExpansion(int order = 0)
      : p(static_cast<std::size_t>(order) + 1) {}
  int order() const { return static_cast<int>(p.size()) - 1; }
  void add(int i, int j, const HP& v) {
    if (i > order()) return;  // truncation
    p[static_cast<std::size_t>(i)].add(j, v);
  }
  HP eval(const HP& logn, const HP& inv_n) const;
};

// Truncated multiple zeta values carry the asymptotics
//   zeta^n(k) = P_0(log n) + P_1(log n)/n + P_2(log n)/n^2 + ...
// built index by index: the outermost sum of m^{-k_d} zeta^{m-1}(k') is
// resummed by Euler-Maclaurin, and the integration constant is matched
// against an exact truncated sum at a moderate point.  P_0 recovers the
// stuffle-regularized polynomial, P_0(log n) = Z*(k; log n + gamma); for
// admissible k it is the constant zeta(k).
class MzvEngine {
 public:
  explicit MzvEngine(long match_n = 2000, int em_order = 8);

  const LogExpansion& expansion(const ZWord& w);

  HP zeta(const ZWord& w);       // requires an admissible word
  HP zeta_star(const ZWord& w);  // star value via merge expansion
  HP zstar_at(const ZWord& w, const HP& t);  // Z*(w; T) numerically

  HP eval_combo(const std::map<ZWord, Rational>& combo);
  HP eval_regpoly(const RegPolynomial& rp, const HP& t);

  long match_n() const { return match_n_; }
  int em_order() const { return em_order_; }

 private:
  LogExpansion extend(const LogExpansion& parent, int k_last,
                      const ZWord& full);
  void em_sum_term(LogExpansion& psi, int j, int s, const HP& kappa) const;

  long match_n_;
  int em_order_;
  int iorder_;  // internal truncation order
  std::vector<HP> bern_factor_;  // B_{2t} / (2t)!
  std::map<ZWord, LogExpansion> cache_;
};

MzvEngine& default_mzv_engine();

// |zeta^M(k) - Z*(k; log M + gamma)| at the given truncation points;
// decreasing for every index by the asymptotic characterization.
std::vector<HP> asymptotic_residuals(const ZWord& k,
                                     const std::vector<long>& truncations,
                                     MzvEngine& engine);

}  // namespace nvs
