#pragma once

#include <vector>

#include "nvs/hp.hpp"

namespace nvs {

// Truncated power series over HP, coefficient of z^k at index k.
using Series = std::vector<HP>;

Series series_mul(const Series& a, const Series& b, std::size_t out_len);
Series series_exp(const Series& a, std::size_t out_len);  // a[0] must be 0
Series series_inverse(const Series& a, std::size_t out_len);  // a[0] != 0

// Cached zeta values and the series data feeding the closed-form
// evaluations: A(z) = Gamma(z+1) e^{gamma z}, its reciprocal, the C_s
// coefficients, eta(k) = zeta({2}^k), and psi(1+z).
class ZetaTable {
 public:
  explicit ZetaTable(int max_weight = 24);

  int max_weight() const { return max_weight_; }
  const HP& zeta(int k) const;      // k >= 2
  const HP& eta(int k) const;       // pi^{2k} / (2k+1)!
  const HP& euler_gamma() const { return gamma_; }
  const HP& pi() const { return pi_; }

  // Taylor coefficients up to degree max_weight.
  const Series& a_series() const { return a_; }
  const Series& a_inv_series() const { return a_inv_; }
  // C_s = (-1)^s [z^s] A(z)^{-1}; C_0 = 1, C_1 = 0.
  const HP& c_coeff(int s) const;
  // psi(1+z) = -gamma + sum_{k>=2} (-1)^k zeta(k) z^{k-1}
  Series digamma1_series(std::size_t len) const;

  // Multi-partition formula for C_s; independent cross-check, s small.
  HP c_by_partition_sum(int s) const;

 private:
  int max_weight_;
  HP gamma_, pi_;
  std::vector<HP> zeta_, eta_, c_;
  Series a_, a_inv_;
};

const ZetaTable& default_zeta_table();

}  // namespace nvs
