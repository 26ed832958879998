#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "nvs/identities.hpp"
#include "nvs/matrix.hpp"
#include "nvs/partition.hpp"
#include "nvs/poly.hpp"
#include "nvs/ssyt.hpp"

namespace nvs {

// Ambient size N = r + s with the shape inside the (s^r) rectangle.
struct NinthContext {
  int N = 0;
  int r = 0;
  int s() const { return N - r; }
  bool fits(const Partition& p, int rr) const {
    return p.length() <= rr && p.part(1) <= N - rr;
  }
};

// Default sizing: slack keeps the r +- 1 shifts and the row/column
// enlargements of the quadratic relations inside the context.
NinthContext make_context(int max_rows, int max_cols, int slack = 4);
NinthContext make_context(const SkewShape& shape, int slack = 4);

// Registry name of the free generator at (i,j): (X_+)_{i,j} = h^{(i)}_{j-i}.
std::string xplus_var_name(int i, int j);

// N x N upper unitriangular matrix with a fresh variable at every (i,j),
// i < j; entry (i,j) is the generator h^{(i)}_{j-i}.
class SymbolicXPlus {
 public:
  explicit SymbolicXPlus(int N);

  int N() const { return n_; }
  const Matrix<SparsePoly>& matrix() const { return x_; }
  const Matrix<SparsePoly>& inverse_matrix() const;  // computed on demand

  // h^{(t)}_d: 1 for d = 0, 0 for d < 0, else the variable at (t, t+d).
  // Out-of-range references are hard errors.
  SparsePoly gen_h(int t, int d) const;
  // e^{(t)}_d as the minor of columns (1..t+1) \ {t-d+1}; cached.
  SparsePoly gen_e(int t, int d) const;

 private:
  int n_;
  Matrix<SparsePoly> x_;
  mutable Matrix<SparsePoly> xinv_;
  mutable bool have_inv_ = false;
  mutable std::map<std::pair<int, int>, SparsePoly> e_cache_;
};

// xi^I_J(X_+) with I, J the Maya diagrams of mu and lambda.
SparsePoly s_minor(const NinthContext& ctx, const SkewShape& shape, int r,
                   const SymbolicXPlus& x);
// (-1)^{|shape|} xi^{J^c}_{I^c}(X_+^{-1}), the complementary-minor form.
SparsePoly s_minor_complementary(const NinthContext& ctx,
                                 const SkewShape& shape, int r,
                                 const SymbolicXPlus& x);

Matrix<SparsePoly> jt_matrix(const NinthContext& ctx, const SkewShape& shape,
                             int r, const SymbolicXPlus& x);
Matrix<SparsePoly> dual_jt_matrix(const NinthContext& ctx,
                                  const SkewShape& shape, int r,
                                  const SymbolicXPlus& x);
// (sign, G) with sign * det G = S; sign = (-1)^q for q inner hooks.
std::pair<int, Matrix<SparsePoly>> giambelli_matrix(const NinthContext& ctx,
                                                    const SkewShape& shape,
                                                    int r,
                                                    const SymbolicXPlus& x);

// S^{(r)}_lambda(X) from the Gauss factor minus the Weyl ratio
// xi^{1..r}_J(X) / xi^{1..r}_{1..r}(X); zero whenever both are defined.
Rational weyl_residual(const Matrix<Rational>& x, const Partition& lambda,
                       int r);

// U_M(u) = U_1 ... U_M and V_M(v) = V_1 ... V_M as products of elementary
// bidiagonal factors; parameters indexed u(t, k), t in [N-1], k in [M].
template <class R>
Matrix<R> build_U(int N, int M, const std::function<R(int, int)>& u) {
  Matrix<R> acc = Matrix<R>::identity(static_cast<std::size_t>(N));
  for (int k = 1; k <= M; ++k)
    for (int t = 1; t <= N - 1; ++t) {
      R c = u(t, k);  // right-multiply by E + c E_{t,t+1}: col_{t+1} += c col_t
      for (int i = 0; i < N; ++i) {
        auto& dst = acc(static_cast<std::size_t>(i), static_cast<std::size_t>(t));
        dst = dst + acc(static_cast<std::size_t>(i), static_cast<std::size_t>(t - 1)) * c;
      }
    }
  return acc;
}

template <class R>
Matrix<R> build_V(int N, int M, const std::function<R(int, int)>& v) {
  Matrix<R> acc = Matrix<R>::identity(static_cast<std::size_t>(N));
  for (int k = 1; k <= M; ++k)
    for (int t = N - 1; t >= 1; --t) {
      R c = v(t, k);
      for (int i = 0; i < N; ++i) {
        auto& dst = acc(static_cast<std::size_t>(i), static_cast<std::size_t>(t));
        dst = dst + acc(static_cast<std::size_t>(i), static_cast<std::size_t>(t - 1)) * c;
      }
    }
  return acc;
}

// Minor of an arbitrary matrix at the Maya diagrams of the shape.
template <class R>
R s_value(const Matrix<R>& m, const SkewShape& shape, int r) {
  int N = static_cast<int>(m.rows());
  auto I = maya(shape.inner(), r, N);
  auto J = maya(shape.outer(), r, N);
  return minor(m, I.indices, J.indices);
}

inline void check_content_band(const SkewShape& shape, int r, int N,
                               bool conjugated) {
  for (const Cell& c : shape.cells()) {
    int band = conjugated ? r - c.content() : r + c.content();
    if (band < 1 || band > N - 1)
      throw std::out_of_range("content shifts outside the parameter band");
  }
}

// Sum over SSYT_M of prod u^{(r + content)}_{entry}.
template <class R>
R tableau_sum(const SkewShape& shape, int r, int N, int M,
              const std::function<R(int, int)>& u) {
  check_content_band(shape, r, N, false);
  R acc = R(0);
  for_each_ssyt(shape, M, [&](const Tableau& t) {
    R prod = R(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k)
      prod = prod * u(r + t.cells[k].content(), t.entries[k]);
    acc = acc + prod;
  });
  return acc;
}

// Conjugate form: sum over SSYT_M(shape') of prod v^{(r - content)}_{entry}.
template <class R>
R tableau_sum_V(const SkewShape& shape, int r, int N, int M,
                const std::function<R(int, int)>& v) {
  SkewShape conj = shape.conjugate();
  check_content_band(conj, r, N, true);
  R acc = R(0);
  for_each_ssyt(conj, M, [&](const Tableau& t) {
    R prod = R(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k)
      prod = prod * v(r - t.cells[k].content(), t.entries[k]);
    acc = acc + prod;
  });
  return acc;
}

// Tableau-variation specialization S(tau^m W): both the direct tableau sum
// and the route through U with u^{(t)}_k = w(k, t - r); returns the pair.
std::pair<Rational, Rational> fk_specialize(
    const SkewShape& shape, const std::function<Rational(int, int)>& w, int m,
    int M, int r, int N);

// S at the Vandermonde matrix [x_i^{j-1}], with x_{n+1},...,x_N set to 0
// after exact evaluation; equals the classical skew Schur polynomial.
SparsePoly vandermonde_specialize(const SkewShape& shape, int n, int N, int r);

// Classical skew Schur polynomial in n variables by its tableau sum.
SparsePoly classical_schur_ssyt(const SkewShape& shape, int n);

}  // namespace nvs
