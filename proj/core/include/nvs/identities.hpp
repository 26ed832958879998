#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nvs/matrix.hpp"

namespace nvs {

inline std::vector<std::vector<int>> subsets_of_size(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v <= n - (r - static_cast<int>(cur.size())) + 1; ++v) {
      cur.push_back(v);
      rec(v + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline std::vector<int> complement_in(int n, const std::vector<int>& sorted) {
  std::vector<int> out;
  std::size_t k = 0;
  for (int v = 1; v <= n; ++v) {
    if (k < sorted.size() && sorted[k] == v) {
      ++k;
      continue;
    }
    out.push_back(v);
  }
  return out;
}

// xi^I_J(XY) - sum_K xi^I_K(X) xi^K_J(Y)
template <class R>
R cauchy_binet_residual(const Matrix<R>& x, const Matrix<R>& y,
                        const std::vector<int>& i_set,
                        const std::vector<int>& j_set) {
  if (x.rows() != x.cols() || y.rows() != y.cols() || x.rows() != y.rows())
    throw std::invalid_argument("cauchy-binet needs equal square matrices");
  int n = static_cast<int>(x.rows());
  R lhs = minor(x * y, i_set, j_set);
  R rhs = Ring<R>::zero();
  for (const auto& k_set : subsets_of_size(n, static_cast<int>(i_set.size())))
    rhs = rhs + minor(x, i_set, k_set) * minor(y, k_set, j_set);
  return lhs - rhs;
}

// xi^I_J(X) - (-1)^{sum I + sum J} det X * xi^{J^c}_{I^c}(X^{-1})
template <class R>
R jacobi_complement_residual(const Matrix<R>& x, const std::vector<int>& i_set,
                             const std::vector<int>& j_set) {
  static_assert(Ring<R>::is_field);
  int n = static_cast<int>(x.rows());
  R d = det(x);
  if (Ring<R>::is_zero(d)) throw std::domain_error("singular matrix");
  Matrix<R> xi = inverse(x);
  long s = std::accumulate(i_set.begin(), i_set.end(), 0L) +
           std::accumulate(j_set.begin(), j_set.end(), 0L);
  R rhs = d * minor(xi, complement_in(n, j_set), complement_in(n, i_set));
  if (s % 2 != 0) rhs = Ring<R>::zero() - rhs;
  return minor(x, i_set, j_set) - rhs;
}

template <class R>
struct GaussDecomposition {
  Matrix<R> lower;    // unitriangular
  Matrix<R> diagonal;
  Matrix<R> upper;    // unitriangular
};

// X = X_- X_0 X_+ via Doolittle LU; requires nonzero leading minors.
template <class R>
GaussDecomposition<R> gauss_decompose(const Matrix<R>& x) {
  static_assert(Ring<R>::is_field);
  if (x.rows() != x.cols()) throw std::invalid_argument("gauss of non-square");
  std::size_t n = x.rows();
  Matrix<R> lower = Matrix<R>::identity(n);
  Matrix<R> u(n, n);
  Matrix<R> work = x;
  for (std::size_t k = 0; k < n; ++k) {
    if (Ring<R>::is_zero(work(k, k)))
      throw std::domain_error("vanishing leading principal minor");
    for (std::size_t j = k; j < n; ++j) u(k, j) = work(k, j);
    for (std::size_t i = k + 1; i < n; ++i) {
      R f = Ring<R>::exact_div(work(i, k), work(k, k));
      lower(i, k) = f;
      for (std::size_t j = k; j < n; ++j)
        work(i, j) = work(i, j) - f * work(k, j);
    }
  }
  Matrix<R> diag(n, n), upper = Matrix<R>::identity(n);
  for (std::size_t i = 0; i < n; ++i) diag(i, i) = u(i, i);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      upper(i, j) = Ring<R>::exact_div(u(i, j), u(i, i));
  return {lower, diag, upper};
}

inline std::vector<int> iota_seq(int lo, int hi) {  // inclusive range
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

// Verifies the minor-ratio formulas for all entries of X_-, X_0, X_+ and of
// X_+^{-1}; returns false on the first mismatch.
template <class R>
bool gauss_minor_formulas_hold(const Matrix<R>& x) {
  auto g = gauss_decompose(x);
  int n = static_cast<int>(x.rows());
  for (int j = 1; j <= n; ++j)
    for (int i = j; i <= n; ++i) {
      auto rows = iota_seq(1, j - 1);
      rows.push_back(i);
      R num = minor(x, rows, iota_seq(1, j));
      R den = minor(x, iota_seq(1, j), iota_seq(1, j));
      if (!(g.lower(i - 1, j - 1) * den == num)) return false;
    }
  for (int i = 1; i <= n; ++i) {
    R num = minor(x, iota_seq(1, i), iota_seq(1, i));
    R den = i == 1 ? Ring<R>::one()
                   : minor(x, iota_seq(1, i - 1), iota_seq(1, i - 1));
    if (!(g.diagonal(i - 1, i - 1) * den == num)) return false;
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      auto cols = iota_seq(1, i - 1);
      cols.push_back(j);
      R num = minor(x, iota_seq(1, i), cols);
      R den = minor(x, iota_seq(1, i), iota_seq(1, i));
      if (!(g.upper(i - 1, j - 1) * den == num)) return false;
    }
  Matrix<R> upinv = inverse(g.upper);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      std::vector<int> cols;
      for (int c = 1; c <= j; ++c)
        if (c != i) cols.push_back(c);
      R num = minor(x, iota_seq(1, j - 1), cols);
      R den = j == 1 ? Ring<R>::one()
                     : minor(x, iota_seq(1, j - 1), iota_seq(1, j - 1));
      if ((j - i) % 2 != 0) num = Ring<R>::zero() - num;
      if (!(upinv(i - 1, j - 1) * den == num)) return false;
    }
  Matrix<R> recon = g.lower * g.diagonal * g.upper;
  return recon == x;
}

// Desnanot-Jacobi: det(Z) xi^{2..k}_{2..k} = xi^{1..k}_{1..k} xi^{2..k+1}_{2..k+1}
//                  - xi^{2..k+1}_{1..k} xi^{1..k}_{2..k+1}
template <class R>
R desnanot_jacobi_residual(const Matrix<R>& z) {
  if (z.rows() != z.cols() || z.rows() < 3)
    throw std::invalid_argument("desnanot-jacobi needs square size >= 3");
  int k = static_cast<int>(z.rows()) - 1;
  R lhs = minor(z, iota_seq(1, k + 1), iota_seq(1, k + 1)) *
          minor(z, iota_seq(2, k), iota_seq(2, k));
  R rhs = minor(z, iota_seq(1, k), iota_seq(1, k)) *
              minor(z, iota_seq(2, k + 1), iota_seq(2, k + 1)) -
          minor(z, iota_seq(2, k + 1), iota_seq(1, k)) *
              minor(z, iota_seq(1, k), iota_seq(2, k + 1));
  return lhs - rhs;
}

// Bazin: det[ xi_{(a_i) ++ (B \ b_j) ++ C} ]_{m x m}
//        = (-1)^{m(m-1)/2} xi_{A ++ C} (xi_{B ++ C})^{m-1},
// all minors taking rows 1..n of Z in order.
template <class R>
R bazin_residual(const Matrix<R>& z, const std::vector<int>& a,
                 const std::vector<int>& b, const std::vector<int>& c) {
  int n = static_cast<int>(z.rows());
  int m = static_cast<int>(a.size());
  if (b.size() != a.size() || static_cast<int>(c.size()) != n - m)
    throw std::invalid_argument("bazin index lengths");
  auto all_rows = iota_seq(1, n);
  auto col_minor = [&](std::vector<int> cols) {
    return minor(z, all_rows, cols);
  };
  Matrix<R> d(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<int> cols;
      cols.push_back(a[i]);
      for (int k = 0; k < m; ++k)
        if (k != j) cols.push_back(b[k]);
      for (int k : c) cols.push_back(k);
      d(i, j) = col_minor(cols);
    }
  std::vector<int> ac = a, bc = b;
  ac.insert(ac.end(), c.begin(), c.end());
  bc.insert(bc.end(), c.begin(), c.end());
  R rhs = col_minor(ac);
  R bcm = col_minor(bc);
  for (int k = 0; k + 1 < m; ++k) rhs = rhs * bcm;
  if ((m * (m - 1) / 2) % 2 != 0) rhs = Ring<R>::zero() - rhs;
  return det(d) - rhs;
}

// Plucker exchange relations on a 2n x n matrix with rows 1..n, 1'..n'
// (stored in that order).  t_rows is the strictly increasing exchange set;
// sigma_RS swaps row s_i with t_i' in place before evaluating.
template <class R>
R plucker_residual(const Matrix<R>& z, const std::vector<int>& t_rows) {
  std::size_t n = z.cols();
  if (z.rows() != 2 * n) throw std::invalid_argument("plucker needs 2n x n");
  int ell = static_cast<int>(t_rows.size());
  if (ell < 1 || ell > static_cast<int>(n))
    throw std::invalid_argument("bad exchange set size");
  for (int i = 0; i + 1 < ell; ++i)
    if (t_rows[i] >= t_rows[i + 1])
      throw std::invalid_argument("exchange rows must increase");
  if (t_rows.front() < 1 || t_rows.back() > static_cast<int>(n))
    throw std::invalid_argument("bad row label");
  auto all_cols = iota_seq(1, static_cast<int>(n));
  auto det_rows = [&](const std::vector<int>& rows) {
    return minor(z, rows, all_cols);
  };
  std::vector<int> top = iota_seq(1, static_cast<int>(n));
  std::vector<int> bottom;  // primed rows are stored at offset n
  for (int i = 1; i <= static_cast<int>(n); ++i) bottom.push_back(n + i);
  R lhs = det_rows(top) * det_rows(bottom);
  R rhs = Ring<R>::zero();
  for (const auto& s_rows : subsets_of_size(static_cast<int>(n), ell)) {
    std::vector<int> r1 = top, r2 = bottom;
    for (int i = 0; i < ell; ++i) {
      r1[s_rows[i] - 1] = n + t_rows[i];
      r2[t_rows[i] - 1] = s_rows[i];
    }
    rhs = rhs + det_rows(r1) * det_rows(r2);
  }
  return lhs - rhs;
}

// Rows of an A-square-B composition, in storage order.
enum class BoxRow : int { L = 0, R = 1 };

// A box B: (2n+2) x (n+1) matrix with rows L, R, 1..n, 1'..n'.  The entry
// rules must cover the natural extensions a(i, n+1) and b(i, 0).
template <class R>
Matrix<R> box_compose(std::size_t n,
                      const std::function<R(int, int)>& a_entry,
                      const std::function<R(int, int)>& b_entry) {
  Matrix<R> m(2 * n + 2, n + 1);
  m(0, 0) = Ring<R>::one();
  m(1, n) = (n % 2 == 0) ? Ring<R>::one() : Ring<R>::zero() - Ring<R>::one();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      m(1 + i, j) = a_entry(static_cast<int>(i), static_cast<int>(j + 1));
      m(1 + n + i, j) = b_entry(static_cast<int>(i), static_cast<int>(j));
    }
  return m;
}

enum class VerdictKind { ProvedEqual, EqualWithConfidence, Unequal };

struct Verdict {
  VerdictKind kind;
  double per_trial_bound = 0.0;  // Schwartz-Zippel failure bound per trial
  int trials = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> witness;
  bool passed() const { return kind != VerdictKind::Unequal; }
};

Verdict identity_verdict_exact(const SparsePoly& lhs, const SparsePoly& rhs);
Verdict identity_verdict_modular(const SparsePoly& lhs, const SparsePoly& rhs,
                                 std::uint64_t seed, int trials);

}  // namespace nvs
