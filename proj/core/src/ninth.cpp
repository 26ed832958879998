#include "nvs/ninth.hpp"

#include <algorithm>
#include <stdexcept>

namespace nvs {

NinthContext make_context(int max_rows, int max_cols, int slack) {
  NinthContext ctx;
  ctx.r = max_rows + (slack + 1) / 2;
  ctx.N = ctx.r + max_cols + slack / 2;
  return ctx;
}

NinthContext make_context(const SkewShape& shape, int slack) {
  return make_context(shape.outer().length(), shape.outer().part(1), slack);
}

std::string xplus_var_name(int i, int j) {
  return "h^(" + std::to_string(i) + ")_" + std::to_string(j - i);
}

SymbolicXPlus::SymbolicXPlus(int N) : n_(N), x_(N, N) {
  for (int i = 0; i < N; ++i) {
    x_(i, i) = SparsePoly(Rational(1));
    for (int j = i + 1; j < N; ++j)
      x_(i, j) = SparsePoly::variable(xplus_var_name(i + 1, j + 1));
  }
}

const Matrix<SparsePoly>& SymbolicXPlus::inverse_matrix() const {
  if (!have_inv_) {
    xinv_ = inverse_unitriangular(x_);
    have_inv_ = true;
  }
  return xinv_;
}

SparsePoly SymbolicXPlus::gen_h(int t, int d) const {
  if (d < 0) return SparsePoly();
  if (d == 0) return SparsePoly(Rational(1));
  if (t < 1 || t + d > n_)
    throw std::out_of_range("generator h^(" + std::to_string(t) + ")_" +
                            std::to_string(d) + " outside context N=" +
                            std::to_string(n_));
  return x_(t - 1, t + d - 1);
}

SparsePoly SymbolicXPlus::gen_e(int t, int d) const {
  if (d < 0) return SparsePoly();
  if (d == 0) return SparsePoly(Rational(1));
  if (t < 1 || d > t || t + 1 > n_)
    throw std::out_of_range("generator e^(" + std::to_string(t) + ")_" +
                            std::to_string(d) + " outside context N=" +
                            std::to_string(n_));
  auto key = std::make_pair(t, d);
  auto it = e_cache_.find(key);
  if (it != e_cache_.end()) return it->second;
  std::vector<int> rows = iota_seq(1, t), cols;
  for (int c = 1; c <= t + 1; ++c)
    if (c != t - d + 1) cols.push_back(c);
  SparsePoly val = det_expand(x_.submatrix(
      [&] {
        std::vector<std::size_t> r;
        for (int v : rows) r.push_back(static_cast<std::size_t>(v - 1));
        return r;
      }(),
      [&] {
        std::vector<std::size_t> c;
        for (int v : cols) c.push_back(static_cast<std::size_t>(v - 1));
        return c;
      }()));
  e_cache_.emplace(key, val);
  return val;
}

SparsePoly s_minor(const NinthContext& ctx, const SkewShape& shape, int r,
                   const SymbolicXPlus& x) {
  if (!ctx.fits(shape.outer(), r))
    throw std::invalid_argument("shape does not fit the context");
  auto I = maya(shape.inner(), r, ctx.N);
  auto J = maya(shape.outer(), r, ctx.N);
  std::vector<std::size_t> rows, cols;
  for (int v : I.indices) rows.push_back(static_cast<std::size_t>(v - 1));
  for (int v : J.indices) cols.push_back(static_cast<std::size_t>(v - 1));
  return det_expand(x.matrix().submatrix(rows, cols));
}

SparsePoly s_minor_complementary(const NinthContext& ctx,
                                 const SkewShape& shape, int r,
                                 const SymbolicXPlus& x) {
  auto I = maya(shape.inner(), r, ctx.N);
  auto J = maya(shape.outer(), r, ctx.N);
  auto ic = maya_complement(I), jc = maya_complement(J);
  std::vector<std::size_t> rows, cols;
  for (int v : jc) rows.push_back(static_cast<std::size_t>(v - 1));
  for (int v : ic) cols.push_back(static_cast<std::size_t>(v - 1));
  SparsePoly m = det_expand(x.inverse_matrix().submatrix(rows, cols));
  if (shape.cell_count() % 2 != 0) m = -m;
  return m;
}

Matrix<SparsePoly> jt_matrix(const NinthContext& ctx, const SkewShape& shape,
                             int r, const SymbolicXPlus& x) {
  (void)ctx;
  const Partition& la = shape.outer();
  const Partition& mu = shape.inner();
  int ell = la.length();
  Matrix<SparsePoly> h(static_cast<std::size_t>(ell),
                       static_cast<std::size_t>(ell));
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j)
      h(i - 1, j - 1) =
          x.gen_h(r + mu.part(j) - j + 1, la.part(i) - mu.part(j) - i + j);
  return h;
}

Matrix<SparsePoly> dual_jt_matrix(const NinthContext& ctx,
                                  const SkewShape& shape, int r,
                                  const SymbolicXPlus& x) {
  (void)ctx;
  Partition lc = shape.outer().conjugate();
  Partition mc = shape.inner().conjugate();
  int ell = lc.length();
  Matrix<SparsePoly> e(static_cast<std::size_t>(ell),
                       static_cast<std::size_t>(ell));
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j)
      e(i - 1, j - 1) =
          x.gen_e(r - mc.part(j) + j - 1, lc.part(i) - mc.part(j) - i + j);
  return e;
}

std::pair<int, Matrix<SparsePoly>> giambelli_matrix(const NinthContext& ctx,
                                                    const SkewShape& shape,
                                                    int r,
                                                    const SymbolicXPlus& x) {
  FrobeniusCoords fl = frobenius(shape.outer());
  FrobeniusCoords fm = frobenius(shape.inner());
  int p = fl.hooks(), q = fm.hooks();
  if (q > p) throw std::invalid_argument("inner shape has too many hooks");
  Matrix<SparsePoly> g(static_cast<std::size_t>(p + q),
                       static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Partition hook = from_frobenius({{fl.alpha[i]}, {fl.beta[j]}});
      g(i, j) = s_minor(ctx, SkewShape(hook), r, x);
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j)
      g(i, p + j) = x.gen_h(r + fm.alpha[j] + 1, fl.alpha[i] - fm.alpha[j]);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j)
      g(p + i, j) = x.gen_e(r - fm.beta[i] - 1, fl.beta[j] - fm.beta[i]);
  return {q % 2 == 0 ? 1 : -1, g};
}

Rational weyl_residual(const Matrix<Rational>& x, const Partition& lambda,
                       int r) {
  int N = static_cast<int>(x.rows());
  auto g = gauss_decompose(x);
  SkewShape shape{lambda};
  Rational lhs = s_value(g.upper, shape, r);
  auto J = maya(lambda, r, N);
  Rational den = minor(x, iota_seq(1, r), iota_seq(1, r));
  if (den == 0) throw std::domain_error("singular leading minor");
  Rational rhs = minor(x, iota_seq(1, r), J.indices) / den;
  return lhs - rhs;
}

std::pair<Rational, Rational> fk_specialize(
    const SkewShape& shape, const std::function<Rational(int, int)>& w, int m,
    int M, int r, int N) {
  Rational direct(0);
  for_each_ssyt(shape, M, [&](const Tableau& t) {
    Rational prod(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k)
      prod *= w(t.entries[k], t.cells[k].content() + m);
    direct += prod;
  });
  std::function<Rational(int, int)> u = [&](int t, int k) {
    return w(k, t - r);
  };
  Matrix<Rational> um = build_U<Rational>(N, M, u);
  Rational via_u = s_value(um, shape, r + m);
  return {direct, via_u};
}

SparsePoly classical_schur_ssyt(const SkewShape& shape, int n) {
  std::vector<SparsePoly> vars;
  for (int i = 1; i <= n; ++i)
    vars.push_back(SparsePoly::variable("x" + std::to_string(i)));
  SparsePoly acc;
  for_each_ssyt(shape, n, [&](const Tableau& t) {
    SparsePoly prod(Rational(1));
    for (std::size_t k = 0; k < t.cells.size(); ++k)
      prod = prod * vars[static_cast<std::size_t>(t.entries[k] - 1)];
    acc += prod;
  });
  return acc;
}

namespace {

// Vandermonde determinant of x_1..x_t as a factored division helper:
// divide `poly` successively by (x_i - x_j) for i < j <= t.
SparsePoly divide_by_vandermonde(SparsePoly poly, int t) {
  for (int i = 1; i <= t; ++i)
    for (int j = i + 1; j <= t; ++j) {
      SparsePoly factor = SparsePoly::variable("x" + std::to_string(j)) -
                          SparsePoly::variable("x" + std::to_string(i));
      poly = poly.exact_div(factor);
    }
  return poly;
}

}  // namespace

SparsePoly vandermonde_specialize(const SkewShape& shape, int n, int N, int r) {
  const Partition& la = shape.outer();
  const Partition& mu = shape.inner();
  int ell = la.length();
  if (r - ell + 1 < n)
    throw std::invalid_argument("r too small for the zero specialization");
  if (N < r + la.part(1) + mu.part(1) + 1)
    throw std::invalid_argument("insufficient N");
  Matrix<SparsePoly> vdm(static_cast<std::size_t>(N),
                         static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i) {
    SparsePoly xi = SparsePoly::variable("x" + std::to_string(i));
    SparsePoly pow(Rational(1));
    for (int j = 1; j <= N; ++j) {
      vdm(i - 1, j - 1) = pow;
      pow = pow * xi;
    }
  }
  // h^{(t)}_d at the Vandermonde point: alternant quotient
  // xi^{1..t}_{1..t-1, t+d} / xi^{1..t}_{1..t}, an exact polynomial that
  // only depends on (t, d), so the cache is shared across calls
  static std::map<std::pair<int, int>, SparsePoly> h_cache;
  auto h_at = [&](int t, int d) -> SparsePoly {
    if (d < 0) return SparsePoly();
    if (d == 0) return SparsePoly(Rational(1));
    auto key = std::make_pair(t, d);
    auto it = h_cache.find(key);
    if (it != h_cache.end()) return it->second;
    std::vector<std::size_t> rows, cols;
    for (int i = 1; i <= t; ++i) rows.push_back(static_cast<std::size_t>(i - 1));
    for (int j = 1; j <= t - 1; ++j)
      cols.push_back(static_cast<std::size_t>(j - 1));
    cols.push_back(static_cast<std::size_t>(t + d - 1));
    SparsePoly num = det_expand(vdm.submatrix(rows, cols));
    SparsePoly val = divide_by_vandermonde(std::move(num), t);
    h_cache.emplace(key, val);
    return val;
  };
  Matrix<SparsePoly> h(static_cast<std::size_t>(ell),
                       static_cast<std::size_t>(ell));
  for (int i = 1; i <= ell; ++i)
    for (int j = 1; j <= ell; ++j)
      h(i - 1, j - 1) =
          h_at(r + mu.part(j) - j + 1, la.part(i) - mu.part(j) - i + j);
  SparsePoly result = det_expand(h);
  std::map<std::uint32_t, Rational> zeros;
  for (int i = n + 1; i <= N; ++i)
    zeros.emplace(var_id("x" + std::to_string(i)), Rational(0));
  return result.substitute(zeros);
}

}  // namespace nvs
