#include "nvs/schur_zeta.hpp"

#include <sstream>
#include <stdexcept>

#include "nvs/matrix.hpp"
#include "nvs/relations.hpp"

namespace nvs {

DiagIndex DiagIndex::three_zone(int alpha, int beta, int gamma) {
  DiagIndex d;
  d.zones_ = true;
  d.alpha_ = alpha;
  d.beta_ = beta;
  d.gamma_ = gamma;
  return d;
}

DiagIndex DiagIndex::table(std::map<int, int> values) {
  DiagIndex d;
  d.zones_ = false;
  d.table_ = std::move(values);
  return d;
}

int DiagIndex::at(int content) const {
  int c = content + shift_;
  if (zones_) return c > 0 ? alpha_ : (c == 0 ? beta_ : gamma_);
  auto it = table_.find(c);
  if (it == table_.end())
    throw std::out_of_range("diagonal index does not cover content " +
                            std::to_string(c));
  return it->second;
}

DiagIndex DiagIndex::shifted(int m) const {
  DiagIndex d = *this;
  d.shift_ += m;
  return d;
}

std::string DiagIndex::str() const {
  std::ostringstream os;
  if (zones_) {
    os << "(" << alpha_ << "," << beta_ << "," << gamma_ << ")";
    if (shift_ != 0) os << "<<" << shift_;
  } else {
    os << "table[" << table_.size() << "]";
  }
  return os.str();
}

ZWord row_word(const DiagIndex& idx, int c0, int len) {
  ZWord w;
  for (int k = 0; k < len; ++k) w.push_back(idx.at(c0 + k));
  return w;
}

ZWord column_word(const DiagIndex& idx, int c0, int len) {
  ZWord w;
  for (int k = 0; k < len; ++k) w.push_back(idx.at(c0 - k));
  return w;
}

Rational schur_zeta_ssyt(const SkewShape& shape, const DiagIndex& idx, long M) {
  std::vector<int> exps;
  for (const Cell& c : shape.cells()) exps.push_back(idx.at(c.content()));
  return schur_zeta_ssyt_entries(shape, exps, M);
}

Rational schur_zeta_ssyt_entries(const SkewShape& shape,
                                 const std::vector<int>& entries, long M) {
  if (entries.size() != static_cast<std::size_t>(shape.cell_count()))
    throw std::invalid_argument("index does not cover the shape");
  Rational acc(0);
  for_each_ssyt(shape, static_cast<int>(M), [&](const Tableau& t) {
    Rational prod(1);
    for (std::size_t k = 0; k < t.cells.size(); ++k) {
      Rational p(1);
      for (int e = 0; e < entries[k]; ++e) p *= t.entries[k];
      prod /= p;
    }
    acc += prod;
  });
  return acc;
}

namespace {

// JT determinant entries: truncated zeta-star along one-row shapes.
template <class R, class RowValue>
R schur_zeta_det_generic(const SkewShape& shape, const RowValue& row_value) {
  const Partition& la = shape.outer();
  const Partition& mu = shape.inner();
  int n = la.length();
  Matrix<R> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int d = la.part(i) - mu.part(j) - i + j;
      if (d < 0) {
        m(i - 1, j - 1) = R(0);
      } else if (d == 0) {
        m(i - 1, j - 1) = R(1);
      } else {
        m(i - 1, j - 1) = row_value(mu.part(j) - j + 1, d);
      }
    }
  return det_bareiss(m);
}

}  // namespace

Rational schur_zeta_det(const SkewShape& shape, const DiagIndex& idx, long M) {
  return schur_zeta_det_generic<Rational>(
      shape, [&](int c0, int len) -> Rational {
        return zeta_trunc(row_word(idx, c0, len), M, /*star=*/true);
      });
}

HP schur_zeta_det_hp(const SkewShape& shape, const DiagIndex& idx, long M) {
  return schur_zeta_det_generic<HP>(shape, [&](int c0, int len) -> HP {
    return zeta_trunc_hp(row_word(idx, c0, len), M, /*star=*/true);
  });
}

CorollaryCheck zeta_giambelli_check(const SkewShape& shape,
                                    const DiagIndex& idx, long M) {
  CorollaryCheck out;
  out.id = "zeta-giambelli(" + shape.str() + ";" + idx.str() + ";M=" +
           std::to_string(M) + ")";
  FrobeniusCoords fl = frobenius(shape.outer());
  FrobeniusCoords fm = frobenius(shape.inner());
  int p = fl.hooks(), q = fm.hooks();
  Rational lhs = schur_zeta_ssyt(shape, idx, M);
  Matrix<Rational> g(static_cast<std::size_t>(p + q),
                     static_cast<std::size_t>(p + q));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      Partition hook = from_frobenius({{fl.alpha[i]}, {fl.beta[j]}});
      g(i, j) = schur_zeta_ssyt(SkewShape(hook), idx, M);
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      int d = fl.alpha[i] - fm.alpha[j];
      g(i, p + j) = d < 0 ? Rational(0)
                   : d == 0
                       ? Rational(1)
                       : zeta_trunc(row_word(idx, fm.alpha[j] + 1, d), M, true);
    }
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < p; ++j) {
      int d = fl.beta[j] - fm.beta[i];
      g(p + i, j) = d < 0 ? Rational(0)
                   : d == 0
                       ? Rational(1)
                       : zeta_trunc(column_word(idx, -fm.beta[i] - 1, d), M,
                                    false);
    }
  Rational rhs = det_bareiss(g);
  if (q % 2 != 0) rhs = -rhs;
  out.pass = lhs == rhs;
  return out;
}

namespace {

Rational zeta_descriptor(const std::vector<int>& outer,
                         const std::vector<int>& inner, const DiagIndex& idx,
                         long M, bool conj) {
  SDescriptor d{outer, inner, 0, conj};
  auto s = descriptor_shape(d);
  if (!s) return Rational(0);
  return schur_zeta_ssyt(*s, idx, M);
}

std::vector<int> seq_slice(const Partition& p, int from, int to, int delta = 0) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(p.part(i) + delta);
  return out;
}

}  // namespace

CorollaryCheck zeta_dj_check(const SkewShape& shape, const DiagIndex& idx,
                             long M, bool h_variant) {
  CorollaryCheck out;
  out.id = std::string("zeta-dj-") + (h_variant ? "h(" : "e(") + shape.str() +
           ";" + idx.str() + ";M=" + std::to_string(M) + ")";
  Partition la = h_variant ? shape.outer() : shape.outer().conjugate();
  Partition mu = h_variant ? shape.inner() : shape.inner().conjugate();
  int k1 = la.length();
  if (k1 < 2) throw std::invalid_argument("needs at least two rows");
  bool conj = !h_variant;
  DiagIndex sh = idx.shifted(h_variant ? -1 : +1);
  Rational lhs =
      zeta_descriptor(seq_slice(la, 1, k1), seq_slice(mu, 1, k1), idx, M, conj) *
      zeta_descriptor(seq_slice(la, 2, k1 - 1), seq_slice(mu, 2, k1 - 1), sh, M,
                      conj);
  Rational rhs =
      zeta_descriptor(seq_slice(la, 1, k1 - 1), seq_slice(mu, 1, k1 - 1), idx,
                      M, conj) *
          zeta_descriptor(seq_slice(la, 2, k1), seq_slice(mu, 2, k1), sh, M,
                          conj) -
      zeta_descriptor(seq_slice(la, 2, k1, -1), seq_slice(mu, 1, k1 - 1), idx,
                      M, conj) *
          zeta_descriptor(seq_slice(la, 1, k1 - 1, +1), seq_slice(mu, 2, k1),
                          sh, M, conj);
  out.pass = lhs == rhs;
  return out;
}

CorollaryCheck zeta_plucker_check(const Partition& lambda, int d,
                                  const DiagIndex& idx, long M,
                                  bool row_variant) {
  CorollaryCheck out;
  out.id = std::string("zeta-plucker-") + (row_variant ? "row(" : "col(") +
           lambda.str() + ";d=" + std::to_string(d) + ";" + idx.str() + ";M=" +
           std::to_string(M) + ")";
  Partition base = row_variant ? lambda : lambda.conjugate();
  CornerDecomposition cd = corner_decomposition(base);
  int n = cd.n();
  if (d < 1 || d > n) throw std::invalid_argument("invalid corner pivot");
  int ell = cd.row_indices[static_cast<std::size_t>(d - 1)];
  bool conj = !row_variant;
  DiagIndex sh = idx.shifted(row_variant ? -1 : +1);
  Rational lhs = zeta_descriptor(base.parts(), {}, idx, M, conj) *
                 zeta_descriptor(base.parts(), {}, sh, M, conj);
  std::vector<int> minus = base.parts(), plus = base.parts();
  for (int i = 0; i < ell; ++i) {
    minus[static_cast<std::size_t>(i)] -= 1;
    plus[static_cast<std::size_t>(i)] += 1;
  }
  Rational rhs = zeta_descriptor(minus, {}, idx, M, conj) *
                 zeta_descriptor(plus, {}, sh, M, conj);
  for (const auto& [ps, qs] : plucker_tuples(n, d)) {
    int t = static_cast<int>(ps.size());
    Rational prod =
        zeta_descriptor(add_rem(base, BorderOp::Add, ps, qs).parts(), {}, idx,
                        M, conj) *
        zeta_descriptor(add_rem(base, BorderOp::Remove, ps, qs).parts(), {}, sh,
                        M, conj);
    if (t % 2 == 1)
      rhs += prod;
    else
      rhs -= prod;
  }
  out.pass = lhs == rhs;
  return out;
}

}  // namespace nvs
