#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "nvs/hp.hpp"
#include "nvs/poly.hpp"
#include "nvs/prime_field.hpp"
#include "nvs/rational.hpp"

namespace nvs {

template <class R>
struct Ring;

template <>
struct Ring<HP> {
  static HP zero() { return HP(0L); }
  static HP one() { return HP(1L); }
  static bool is_zero(const HP& x) { return x.is_zero(); }
  static HP exact_div(const HP& a, const HP& b) { return a / b; }
  static constexpr bool is_field = true;
};

template <>
struct Ring<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational exact_div(const Rational& a, const Rational& b) { return a / b; }
  static constexpr bool is_field = true;
};

template <>
struct Ring<PFElem> {
  static PFElem zero() { return PFElem(); }
  static PFElem one() { return PFElem(1L); }
  static bool is_zero(const PFElem& x) { return x.is_zero(); }
  static PFElem exact_div(const PFElem& a, const PFElem& b) { return a / b; }
  static constexpr bool is_field = true;
};

template <>
struct Ring<SparsePoly> {
  static SparsePoly zero() { return SparsePoly(); }
  static SparsePoly one() { return SparsePoly(Rational(1)); }
  static bool is_zero(const SparsePoly& x) { return x.is_zero(); }
  static SparsePoly exact_div(const SparsePoly& a, const SparsePoly& b) {
    return a.exact_div(b);
  }
  static constexpr bool is_field = false;
};

// Dense rectangular matrix over an exact ring.
template <class R>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Ring<R>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Ring<R>::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const R& a = (*this)(i, k);
        if (Ring<R>::is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out(i, j) = out(i, j) + a * o(k, j);
      }
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // Submatrix with the given row/column order (0-based, duplicates allowed;
  // sequence order carries the sign of the minor).
  Matrix submatrix(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const {
    Matrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (rows[i] >= rows_ || cols[j] >= cols_)
          throw std::out_of_range("minor index out of range");
        out(i, j) = (*this)(rows[i], cols[j]);
      }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<R> data_;
};

// Recursive cofactor expansion along the first row.
template <class R>
R det_cofactor(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  std::size_t n = m.rows();
  if (n == 0) return Ring<R>::one();
  if (n == 1) return m(0, 0);
  R acc = Ring<R>::zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (Ring<R>::is_zero(m(0, j))) continue;
    Matrix<R> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cj = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j) continue;
        sub(i - 1, cj++) = m(i, k);
      }
    }
    R term = m(0, j) * det_cofactor(sub);
    if (j % 2 == 0)
      acc = acc + term;
    else
      acc = acc - term;
  }
  return acc;
}

// Bareiss fraction-free elimination; every division is exact over an
// integral domain.  Pivots by first nonzero entry, tracking the sign.
template <class R>
R det_bareiss(Matrix<R> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  std::size_t n = m.rows();
  if (n == 0) return Ring<R>::one();
  R prev = Ring<R>::one();
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ring<R>::is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && Ring<R>::is_zero(m(p, k))) ++p;
      if (p == n) return Ring<R>::zero();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = Ring<R>::exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  if (negate) d = Ring<R>::zero() - d;
  return d;
}

// Subset dynamic program over column subsets: division-free, good for
// matrices whose entries are short polynomials.  O(2^n * n) ring products.
template <class R>
R det_expand(const Matrix<R>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
  std::size_t n = m.rows();
  if (n == 0) return Ring<R>::one();
  if (n > 20) throw std::invalid_argument("det_expand limited to n <= 20");
  std::vector<R> dp(std::size_t{1} << n, Ring<R>::zero());
  dp[0] = Ring<R>::one();
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (Ring<R>::is_zero(dp[mask])) continue;
    std::size_t i = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (i == n) continue;
    std::size_t placed = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      if (!Ring<R>::is_zero(m(i, j))) {
        R term = dp[mask] * m(i, j);
        std::size_t next = mask | (std::size_t{1} << j);
        if (placed % 2 == 0)
          dp[next] = dp[next] + term;
        else
          dp[next] = dp[next] - term;
      }
      ++placed;
    }
  }
  return dp[dp.size() - 1];
}

// det() dispatch: cofactor for small sizes, fraction-free beyond.
template <class R>
R det(const Matrix<R>& m) {
  if (m.rows() <= 4) return det_cofactor(m);
  if constexpr (!Ring<R>::is_field) {
    if (m.rows() <= 12) return det_expand(m);
  }
  return det_bareiss(m);
}

// xi^A_B: minor with ordered (possibly unsorted) index sequences, 1-based.
template <class R>
R minor(const Matrix<R>& m, const std::vector<int>& rows,
        const std::vector<int>& cols) {
  if (rows.size() != cols.size())
    throw std::invalid_argument("minor needs |rows| == |cols|");
  std::vector<std::size_t> r, c;
  r.reserve(rows.size());
  c.reserve(cols.size());
  for (int i : rows) {
    if (i < 1) throw std::out_of_range("row index must be >= 1");
    r.push_back(static_cast<std::size_t>(i - 1));
  }
  for (int j : cols) {
    if (j < 1) throw std::out_of_range("column index must be >= 1");
    c.push_back(static_cast<std::size_t>(j - 1));
  }
  return det(m.submatrix(r, c));
}

// Sorts an index sequence and reports the permutation sign; for converting
// sequence minors xi^A_B to the sorted-set convention xi^I_J.
inline int sort_sign(std::vector<int>& idx) {
  int sign = 1;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j)
      if (idx[i] > idx[j]) {
        std::swap(idx[i], idx[j]);
        sign = -sign;
      }
  return sign;
}

// Field inverse by Gauss-Jordan.  Throws on singular input.
template <class R>
Matrix<R> inverse(Matrix<R> m) {
  static_assert(Ring<R>::is_field);
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square");
  std::size_t n = m.rows();
  Matrix<R> inv = Matrix<R>::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && Ring<R>::is_zero(m(p, k))) ++p;
    if (p == n) throw std::domain_error("singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(k, j), m(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    R piv = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) = Ring<R>::exact_div(m(k, j), piv);
      inv(k, j) = Ring<R>::exact_div(inv(k, j), piv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || Ring<R>::is_zero(m(i, k))) continue;
      R f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = m(i, j) - f * m(k, j);
        inv(i, j) = inv(i, j) - f * inv(k, j);
      }
    }
  }
  return inv;
}

// Inverse of an upper unitriangular matrix by back substitution; stays in
// the ring (no division), so it applies to polynomial matrices.
template <class R>
Matrix<R> inverse_unitriangular(const Matrix<R>& m) {
  std::size_t n = m.rows();
  Matrix<R> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = Ring<R>::one();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i-- > 0;) {
      R s = Ring<R>::zero();
      for (std::size_t k = i + 1; k <= j; ++k) s = s + m(i, k) * inv(k, j);
      inv(i, j) = Ring<R>::zero() - s;
    }
  return inv;
}

}  // namespace nvs
