#include "nvs/zeta_tables.hpp"

#include <functional>
#include <stdexcept>

namespace nvs {

Series series_mul(const Series& a, const Series& b, std::size_t out_len) {
  Series out(out_len, HP(0L));
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// exp of a series with zero constant term: f' = a' f, coefficient recursion
// n f_n = sum_{k=1}^{n} k a_k f_{n-k}.
Series series_exp(const Series& a, std::size_t out_len) {
  if (!a.empty() && !a[0].is_zero())
    throw std::invalid_argument("series_exp needs zero constant term");
  Series f(out_len, HP(0L));
  if (out_len == 0) return f;
  f[0] = HP(1L);
  for (std::size_t n = 1; n < out_len; ++n) {
    HP acc(0L);
    for (std::size_t k = 1; k <= n && k < a.size(); ++k)
      acc += HP(static_cast<long>(k)) * a[k] * f[n - k];
    f[n] = acc / HP(static_cast<long>(n));
  }
  return f;
}

Series series_inverse(const Series& a, std::size_t out_len) {
  if (a.empty() || a[0].is_zero())
    throw std::invalid_argument("series_inverse needs nonzero constant term");
  Series out(out_len, HP(0L));
  out[0] = HP(1L) / a[0];
  for (std::size_t n = 1; n < out_len; ++n) {
    HP acc(0L);
    for (std::size_t k = 1; k <= n; ++k) {
      if (k < a.size() && !a[k].is_zero()) acc += a[k] * out[n - k];
    }
    out[n] = -acc / a[0];
  }
  return out;
}

ZetaTable::ZetaTable(int max_weight) : max_weight_(max_weight) {
  gamma_ = HP::euler_gamma();
  pi_ = HP::pi();
  zeta_.resize(static_cast<std::size_t>(max_weight_) + 1, HP(0L));
  for (int k = 2; k <= max_weight_; ++k)
    zeta_[static_cast<std::size_t>(k)] =
        HP::riemann_zeta(static_cast<unsigned long>(k));
  eta_.resize(static_cast<std::size_t>(max_weight_) / 2 + 2, HP(0L));
  eta_[0] = HP(1L);
  HP fact(1L);
  HP pi2 = pi_ * pi_;
  HP pipow(1L);
  for (int k = 1; k < static_cast<int>(eta_.size()); ++k) {
    // eta(k) = pi^{2k} / (2k+1)!
    pipow *= pi2;
    fact *= HP(2L * k) * HP(2L * k + 1);
    eta_[static_cast<std::size_t>(k)] = pipow / fact;
  }
  std::size_t len = static_cast<std::size_t>(max_weight_) + 1;
  Series logA(len, HP(0L));
  for (int l = 2; l <= max_weight_; ++l) {
    HP c = zeta_[static_cast<std::size_t>(l)] / HP(static_cast<long>(l));
    logA[static_cast<std::size_t>(l)] = (l % 2 == 0) ? c : -c;
  }
  a_ = series_exp(logA, len);
  Series neg(len, HP(0L));
  for (std::size_t i = 0; i < len; ++i) neg[i] = -logA[i];
  a_inv_ = series_exp(neg, len);
  c_.resize(len, HP(0L));
  for (std::size_t s = 0; s < len; ++s)
    c_[s] = (s % 2 == 0) ? a_inv_[s] : -a_inv_[s];
}

const HP& ZetaTable::zeta(int k) const {
  if (k < 2 || k > max_weight_)
    throw std::out_of_range("zeta argument outside table");
  return zeta_[static_cast<std::size_t>(k)];
}

const HP& ZetaTable::eta(int k) const {
  if (k < 0 || k >= static_cast<int>(eta_.size()))
    throw std::out_of_range("eta argument outside table");
  return eta_[static_cast<std::size_t>(k)];
}

const HP& ZetaTable::c_coeff(int s) const {
  if (s < 0 || s >= static_cast<int>(c_.size()))
    throw std::out_of_range("C_s outside table");
  return c_[static_cast<std::size_t>(s)];
}

Series ZetaTable::digamma1_series(std::size_t len) const {
  Series out(len, HP(0L));
  if (len == 0) return out;
  out[0] = -gamma_;
  for (std::size_t j = 1; j + 1 <= static_cast<std::size_t>(max_weight_) && j < len; ++j) {
    HP z = zeta_[j + 1];
    out[j] = (j % 2 == 1) ? z : -z;  // (-1)^{k} zeta(k) z^{k-1}, k = j+1
  }
  return out;
}

HP ZetaTable::c_by_partition_sum(int s) const {
  if (s == 0) return HP(1L);
  if (s == 1) return HP(0L);
  // sum over (k_2,...,k_s) with 2k_2 + ... + s k_s = s of
  //   (-1)^{sum k_l} / prod k_l! * prod (zeta(l)/l)^{k_l}
  HP total(0L);
  std::vector<int> ks(static_cast<std::size_t>(s) + 1, 0);
  std::function<void(int, int, HP, int)> rec = [&](int l, int rem, HP prod,
                                                   int parity) {
    if (rem == 0) {
      total += (parity % 2 == 0) ? prod : -prod;
      return;
    }
    if (l > s || l > rem) return;
    rec(l + 1, rem, prod, parity);
    HP base = zeta(l) / HP(static_cast<long>(l));
    HP p = prod;
    int used = 0;
    for (int k = 1; l * k <= rem; ++k) {
      p *= base / HP(static_cast<long>(k));
      used = k;
      rec(l + 1, rem - l * k, p, parity + k);
    }
    (void)used;
  };
  rec(2, s, HP(1L), 0);
  return total;
}

const ZetaTable& default_zeta_table() {
  static ZetaTable table(24);
  return table;
}

}  // namespace nvs
