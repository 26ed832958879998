#include "nvs/relations.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace nvs {

std::optional<SkewShape> descriptor_shape(const SDescriptor& d) {
  auto outer = Partition::from_sequence(d.outer);
  auto inner = Partition::from_sequence(d.inner);
  if (!outer || !inner) return std::nullopt;
  if (!outer->contains(*inner)) return std::nullopt;
  if (d.conj) return SkewShape(outer->conjugate(), inner->conjugate());
  return SkewShape(*outer, *inner);
}

namespace {

struct ContextSize {
  int rows = 0, cols = 0;
};

ContextSize instance_extent(const RelationInstance& inst) {
  ContextSize ext;
  auto visit = [&](const std::vector<RelTerm>& side) {
    for (const RelTerm& t : side)
      for (const SDescriptor& d : t.factors) {
        auto s = descriptor_shape(d);
        if (!s) continue;
        ext.rows = std::max(ext.rows, s->outer().length());
        ext.cols = std::max(ext.cols, s->outer().part(1));
      }
  };
  visit(inst.lhs);
  visit(inst.rhs);
  return ext;
}

std::vector<int> slice(const Partition& p, int from, int to, int delta = 0) {
  std::vector<int> out;
  for (int i = from; i <= to; ++i) out.push_back(p.part(i) + delta);
  return out;
}

// ---- packed multilinear fast path --------------------------------------

// Entry codes for matrices whose entries are 0, 1, or a single variable.
constexpr std::int64_t kZero = -2, kOne = -1;

struct VarIds {
  int N = 0;
  std::vector<std::int64_t> id;  // (i-1)*N + (j-1) -> code
  std::int64_t code(int i, int j) const {
    return id[static_cast<std::size_t>(i - 1) * N + (j - 1)];
  }
};

VarIds xplus_ids(int N) {
  VarIds v;
  v.N = N;
  v.id.assign(static_cast<std::size_t>(N) * N, kZero);
  for (int i = 1; i <= N; ++i) {
    v.id[static_cast<std::size_t>(i - 1) * N + (i - 1)] = kOne;
    for (int j = i + 1; j <= N; ++j)
      v.id[static_cast<std::size_t>(i - 1) * N + (j - 1)] =
          var_id(xplus_var_name(i, j));
  }
  return v;
}

std::int64_t h_code(const VarIds& ids, int t, int d) {
  if (d < 0) return kZero;
  if (d == 0) return kOne;
  if (t < 1 || t + d > ids.N)
    throw std::out_of_range("generator outside context");
  return ids.code(t, t + d);
}

struct FastTerm {
  std::array<std::uint16_t, 8> vars{};  // sorted ascending, 0-padded
  std::uint8_t len = 0;
  std::int8_t sign = 1;
};

// Subset DP determinant expansion for a matrix of entry codes.
std::vector<FastTerm> det_terms(const std::vector<std::int64_t>& m, int n) {
  std::vector<std::vector<FastTerm>> dp(std::size_t{1} << n);
  dp[0].push_back(FastTerm{});
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask].empty()) continue;
    int i = __builtin_popcountll(mask);
    if (i == n) continue;
    int placed = 0;
    for (int j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      std::int64_t code = m[static_cast<std::size_t>(i) * n + j];
      if (code != kZero) {
        std::size_t next = mask | (std::size_t{1} << j);
        for (const FastTerm& t : dp[mask]) {
          FastTerm nt = t;
          if (code != kOne) {
            if (code + 1 > 0xFFFF)
              throw std::overflow_error("variable id exceeds packed range");
            // insert var id + 1, keeping ascending order
            std::uint16_t v = static_cast<std::uint16_t>(code + 1);
            int pos = nt.len;
            while (pos > 0 && nt.vars[static_cast<std::size_t>(pos - 1)] > v) {
              nt.vars[static_cast<std::size_t>(pos)] =
                  nt.vars[static_cast<std::size_t>(pos - 1)];
              --pos;
            }
            nt.vars[static_cast<std::size_t>(pos)] = v;
            ++nt.len;
          }
          if (placed % 2 != 0) nt.sign = static_cast<std::int8_t>(-nt.sign);
          dp[next].push_back(nt);
        }
      }
      ++placed;
    }
    dp[mask].clear();
  }
  return dp.back();
}

std::vector<FastTerm> jt_det_terms(const VarIds& ids, const SkewShape& shape,
                                   int r) {
  const Partition& la = shape.outer();
  const Partition& mu = shape.inner();
  int n = la.length();
  if (n == 0) {
    FastTerm one;
    return {one};
  }
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      m[static_cast<std::size_t>(i - 1) * n + (j - 1)] =
          h_code(ids, r + mu.part(j) - j + 1, la.part(i) - mu.part(j) - i + j);
  return det_terms(m, n);
}

// Product monomial of two multilinear det terms: up to 16 var slots.
struct PackedMono {
  std::array<std::uint64_t, 4> w{};
  friend bool operator<(const PackedMono& a, const PackedMono& b) {
    return a.w < b.w;
  }
  friend bool operator==(const PackedMono& a, const PackedMono& b) {
    return a.w == b.w;
  }
};

PackedMono merge_terms(const FastTerm& a, const FastTerm& b) {
  std::array<std::uint16_t, 16> merged{};
  std::size_t i = 0, j = 0, k = 0;
  while (i < a.len && j < b.len)
    merged[k++] = a.vars[i] <= b.vars[j] ? a.vars[i++] : b.vars[j++];
  while (i < a.len) merged[k++] = a.vars[i++];
  while (j < b.len) merged[k++] = b.vars[j++];
  PackedMono p;
  for (std::size_t t = 0; t < 16; ++t)
    p.w[t / 4] |= static_cast<std::uint64_t>(merged[t]) << (16 * (t % 4));
  return p;
}

bool fast_path_applicable(const RelationInstance& inst) {
  auto ok = [](const std::vector<RelTerm>& side) {
    for (const RelTerm& t : side)
      if (!t.gens.empty() || t.factors.size() != 2) return false;
    return true;
  };
  return ok(inst.lhs) && ok(inst.rhs);
}

bool verify_fast(const RelationInstance& inst, int slack) {
  ContextSize ext = instance_extent(inst);
  NinthContext ctx = make_context(ext.rows, ext.cols, slack);
  VarIds ids = xplus_ids(ctx.N);
  std::vector<std::pair<PackedMono, std::int64_t>> acc;
  auto emit_side = [&](const std::vector<RelTerm>& side, int orient) {
    for (const RelTerm& t : side) {
      auto s0 = descriptor_shape(t.factors[0]);
      auto s1 = descriptor_shape(t.factors[1]);
      if (!s0 || !s1) continue;
      auto a = jt_det_terms(ids, *s0, ctx.r + t.factors[0].r_off);
      auto b = jt_det_terms(ids, *s1, ctx.r + t.factors[1].r_off);
      std::int64_t c = orient * t.coeff;
      acc.reserve(acc.size() + a.size() * b.size());
      for (const FastTerm& ta : a)
        for (const FastTerm& tb : b)
          acc.emplace_back(merge_terms(ta, tb),
                           c * static_cast<std::int64_t>(ta.sign) *
                               static_cast<std::int64_t>(tb.sign));
    }
  };
  emit_side(inst.lhs, +1);
  emit_side(inst.rhs, -1);
  std::sort(acc.begin(), acc.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t i = 0;
  while (i < acc.size()) {
    std::int64_t sum = 0;
    std::size_t j = i;
    while (j < acc.size() && acc[j].first == acc[i].first) sum += acc[j++].second;
    if (sum != 0) return false;
    i = j;
  }
  return true;
}

// ---- general polynomial route -------------------------------------------

class PolyEvaluator {
 public:
  PolyEvaluator(const RelationInstance& inst, int slack)
      : ctx_(make_context(instance_extent(inst).rows,
                          instance_extent(inst).cols, slack)),
        x_(ctx_.N) {}

  SparsePoly term_value(const RelTerm& t) {
    SparsePoly prod(Rational(t.coeff));
    for (const GenFactor& g : t.gens) {
      SparsePoly gp = g.kind == 'h' ? x_.gen_h(ctx_.r + g.t_off, g.d)
                                    : x_.gen_e(ctx_.r + g.t_off, g.d);
      if (gp.is_zero()) return SparsePoly();
      prod = prod * gp;
    }
    for (const SDescriptor& d : t.factors) {
      auto s = descriptor_shape(d);
      if (!s) return SparsePoly();
      prod = prod * s_poly(*s, ctx_.r + d.r_off);
    }
    return prod;
  }

  SparsePoly residual(const RelationInstance& inst) {
    SparsePoly acc;
    for (const RelTerm& t : inst.lhs) acc += term_value(t);
    for (const RelTerm& t : inst.rhs) acc -= term_value(t);
    return acc;
  }

 private:
  SparsePoly s_poly(const SkewShape& s, int r) {
    auto key = std::make_pair(s.str(), r);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    SparsePoly v = s.outer().empty() ? SparsePoly(Rational(1))
                                     : det_expand(jt_matrix(ctx_, s, r, x_));
    cache_.emplace(key, v);
    return v;
  }

  NinthContext ctx_;
  SymbolicXPlus x_;
  std::map<std::pair<std::string, int>, SparsePoly> cache_;
};

}  // namespace

SparsePoly relation_residual(const RelationInstance& inst, int slack) {
  PolyEvaluator ev(inst, slack);
  return ev.residual(inst);
}

bool verify_relation_exact(const RelationInstance& inst, int slack) {
  if (fast_path_applicable(inst)) return verify_fast(inst, slack);
  return relation_residual(inst, slack).is_zero();
}

Verdict verify_relation_modular(const RelationInstance& inst,
                                std::uint64_t seed, int trials, int slack) {
  ContextSize ext = instance_extent(inst);
  NinthContext ctx = make_context(ext.rows, ext.cols, slack);
  RationalSampler sampler(seed);
  Verdict verdict;
  verdict.kind = VerdictKind::EqualWithConfidence;
  verdict.trials = trials;
  verdict.seed = seed;
  // each side is a sum of products of two determinants of size <= rows+1
  verdict.per_trial_bound =
      static_cast<double>(2 * (ext.rows + 2)) /
      static_cast<double>(PFElem::modulus());
  for (int trial = 0; trial < trials; ++trial) {
    Matrix<PFElem> xp = Matrix<PFElem>::identity(static_cast<std::size_t>(ctx.N));
    for (int i = 0; i < ctx.N; ++i)
      for (int j = i + 1; j < ctx.N; ++j)
        xp(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            PFElem::from_u64(sampler.next_u64());
    auto gen_h = [&](int t, int d) -> PFElem {
      if (d < 0) return PFElem();
      if (d == 0) return PFElem(1L);
      if (t < 1 || t + d > ctx.N) throw std::out_of_range("generator range");
      return xp(static_cast<std::size_t>(t - 1),
                static_cast<std::size_t>(t + d - 1));
    };
    auto gen_e = [&](int t, int d) -> PFElem {
      if (d < 0) return PFElem();
      if (d == 0) return PFElem(1L);
      if (t < 1 || d > t || t + 1 > ctx.N)
        throw std::out_of_range("generator range");
      std::vector<std::size_t> rows, cols;
      for (int i = 1; i <= t; ++i) rows.push_back(static_cast<std::size_t>(i - 1));
      for (int c = 1; c <= t + 1; ++c)
        if (c != t - d + 1) cols.push_back(static_cast<std::size_t>(c - 1));
      return det_bareiss(xp.submatrix(rows, cols));
    };
    auto s_val = [&](const SkewShape& s, int r) -> PFElem {
      const Partition& la = s.outer();
      const Partition& mu = s.inner();
      int n = la.length();
      Matrix<PFElem> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
              gen_h(r + mu.part(j) - j + 1, la.part(i) - mu.part(j) - i + j);
      return det_bareiss(m);
    };
    auto side_val = [&](const std::vector<RelTerm>& side) -> PFElem {
      PFElem acc;
      for (const RelTerm& t : side) {
        PFElem prod(static_cast<long>(t.coeff));
        bool zero = false;
        for (const GenFactor& g : t.gens) {
          PFElem gv = g.kind == 'h' ? gen_h(ctx.r + g.t_off, g.d)
                                    : gen_e(ctx.r + g.t_off, g.d);
          if (gv.is_zero()) {
            zero = true;
            break;
          }
          prod *= gv;
        }
        if (zero) continue;
        for (const SDescriptor& d : t.factors) {
          auto s = descriptor_shape(d);
          if (!s) {
            zero = true;
            break;
          }
          prod *= s_val(*s, ctx.r + d.r_off);
        }
        if (!zero) acc += prod;
      }
      return acc;
    };
    if (side_val(inst.lhs) != side_val(inst.rhs)) {
      verdict.kind = VerdictKind::Unequal;
      verdict.witness = "trial " + std::to_string(trial) + " seed " +
                        std::to_string(seed);
      return verdict;
    }
  }
  return verdict;
}

// ---- builders ------------------------------------------------------------

RelationInstance dj_relation(const SkewShape& shape, DjVariant variant) {
  RelationInstance inst;
  const bool h_side = variant == DjVariant::H;
  Partition la = h_side ? shape.outer() : shape.outer().conjugate();
  Partition mu = h_side ? shape.inner() : shape.inner().conjugate();
  int k1 = la.length();  // k + 1
  if (k1 < 2) throw std::invalid_argument("needs at least two rows");
  int off = h_side ? -1 : +1;
  bool conj = !h_side;
  inst.id = std::string(h_side ? "djamt-h" : "djamt-e") + "(" + shape.str() + ")";
  auto desc = [&](std::vector<int> outer, std::vector<int> inner,
                  int r_off) -> SDescriptor {
    return SDescriptor{std::move(outer), std::move(inner), r_off, conj};
  };
  inst.lhs.push_back(RelTerm{
      1,
      {},
      {desc(slice(la, 1, k1), slice(mu, 1, k1), 0),
       desc(slice(la, 2, k1 - 1), slice(mu, 2, k1 - 1), off)}});
  inst.rhs.push_back(RelTerm{
      1,
      {},
      {desc(slice(la, 1, k1 - 1), slice(mu, 1, k1 - 1), 0),
       desc(slice(la, 2, k1), slice(mu, 2, k1), off)}});
  inst.rhs.push_back(RelTerm{
      -1,
      {},
      {desc(slice(la, 2, k1, -1), slice(mu, 1, k1 - 1), 0),
       desc(slice(la, 1, k1 - 1, +1), slice(mu, 2, k1), off)}});
  return inst;
}

RelationInstance rectangle_relation(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p, q >= 1");
  RelationInstance inst;
  inst.id = "rectangle(p=" + std::to_string(p) + ",q=" + std::to_string(q) + ")";
  auto rect_desc = [](int pp, int qq, int off) {
    return SDescriptor{rectangle(pp, qq).parts(), {}, off, false};
  };
  inst.lhs.push_back(
      RelTerm{1, {}, {rect_desc(p + 1, q, 0), rect_desc(p - 1, q, -1)}});
  inst.rhs.push_back(RelTerm{1, {}, {rect_desc(p, q, 0), rect_desc(p, q, -1)}});
  inst.rhs.push_back(
      RelTerm{-1, {}, {rect_desc(p, q - 1, 0), rect_desc(p, q + 1, -1)}});
  return inst;
}

namespace {

std::vector<int> drop_index(const std::vector<int>& v, int i /*1-based*/) {
  std::vector<int> out;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (k != i - 1) out.push_back(v[static_cast<std::size_t>(k)]);
  return out;
}

std::vector<int> drop_first(const std::vector<int>& v) {
  return std::vector<int>(v.begin() + (v.empty() ? 0 : 1), v.end());
}

std::vector<int> drop_last(const std::vector<int>& v) {
  if (v.empty()) return v;
  return std::vector<int>(v.begin(), v.end() - 1);
}

SDescriptor frob_desc(const std::vector<int>& a, const std::vector<int>& b,
                      const std::vector<int>& g, const std::vector<int>& d,
                      int r_off) {
  Partition outer = from_frobenius({a, b});
  Partition inner = from_frobenius({g, d});
  return SDescriptor{outer.parts(), inner.parts(), r_off, false};
}

}  // namespace

RelationInstance giambelli_quadratic(const SkewShape& shape,
                                     GiambelliVariant variant) {
  FrobeniusCoords fl = frobenius(shape.outer());
  FrobeniusCoords fm = frobenius(shape.inner());
  const auto &a = fl.alpha, &b = fl.beta, &g = fm.alpha, &d = fm.beta;
  int p = fl.hooks(), q = fm.hooks();
  RelationInstance inst;
  if (variant == GiambelliVariant::NonSkew) {
    inst.id = "giambelli-nonskew(" + shape.outer().str() + ")";
    if (p < 2) return inst;  // hook: the relation degenerates to 0 = 0
    auto mid = [&](const std::vector<int>& v) { return drop_first(drop_last(v)); };
    inst.lhs.push_back(RelTerm{
        1, {}, {frob_desc(a, b, {}, {}, 0), frob_desc(mid(a), mid(b), {}, {}, 0)}});
    inst.rhs.push_back(
        RelTerm{1,
                {},
                {frob_desc(drop_last(a), drop_last(b), {}, {}, 0),
                 frob_desc(drop_first(a), drop_first(b), {}, {}, 0)}});
    inst.rhs.push_back(
        RelTerm{-1,
                {},
                {frob_desc(drop_first(a), drop_last(b), {}, {}, 0),
                 frob_desc(drop_last(a), drop_first(b), {}, {}, 0)}});
    return inst;
  }
  if (q < 1) throw std::invalid_argument("skew variant needs a nonempty inner");
  inst.id = "giambelli-skew(" + shape.str() + ")";
  auto gm = drop_last(g), dm = drop_last(d);
  inst.lhs.push_back(RelTerm{
      1,
      {},
      {frob_desc(a, b, g, d, 0), frob_desc(drop_first(a), drop_first(b), gm, dm, 0)}});
  inst.rhs.push_back(RelTerm{
      1,
      {},
      {frob_desc(a, b, gm, dm, 0), frob_desc(drop_first(a), drop_first(b), g, d, 0)}});
  int gq = g[static_cast<std::size_t>(q - 1)];
  int dq = d[static_cast<std::size_t>(q - 1)];
  for (int i = 1; i <= p; ++i)
    for (int j = 1; j <= p; ++j) {
      RelTerm term;
      term.coeff = ((i + j) % 2 == 0) ? 1 : -1;
      term.gens.push_back(GenFactor{'h', gq + 1, a[static_cast<std::size_t>(i - 1)] - gq});
      term.gens.push_back(GenFactor{'e', -dq - 1, b[static_cast<std::size_t>(j - 1)] - dq});
      term.factors.push_back(frob_desc(drop_index(a, i), drop_first(b), gm, dm, 0));
      term.factors.push_back(frob_desc(drop_first(a), drop_index(b, j), gm, dm, 0));
      inst.rhs.push_back(std::move(term));
    }
  return inst;
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> plucker_tuples(
    int n, int d) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  int tmax = std::min(d, n - d + 1);
  for (int t = 1; t <= tmax; ++t) {
    auto ps_list = subsets_of_size(d, t);  // subsets of [1..d]
    std::vector<std::vector<int>> qs_list;
    for (auto& q : subsets_of_size(n - d + 1, t)) {
      std::vector<int> qq;
      for (int v : q) qq.push_back(v + d - 1);  // subsets of [d..n]
      std::reverse(qq.begin(), qq.end());       // descending
      qs_list.push_back(std::move(qq));
    }
    for (const auto& ps : ps_list)
      for (const auto& qs : qs_list) out.emplace_back(ps, qs);
  }
  return out;
}

RelationInstance plucker_quadratic(const Partition& lambda, int d,
                                   PluckerVariant variant) {
  const bool row = variant == PluckerVariant::Row;
  Partition base = row ? lambda : lambda.conjugate();
  CornerDecomposition cd = corner_decomposition(base);
  int n = cd.n();
  if (d < 1 || d > n) throw std::invalid_argument("invalid corner pivot d");
  int ell = cd.row_indices[static_cast<std::size_t>(d - 1)];
  int off = row ? -1 : +1;
  bool conj = !row;
  RelationInstance inst;
  inst.id = std::string(row ? "plucker-row(" : "plucker-col(") + lambda.str() +
            ";d=" + std::to_string(d) + ")";
  auto desc = [&](std::vector<int> outer, int r_off) {
    return SDescriptor{std::move(outer), {}, r_off, conj};
  };
  inst.lhs.push_back(RelTerm{1, {}, {desc(base.parts(), 0), desc(base.parts(), off)}});
  std::vector<int> minus = base.parts(), plus = base.parts();
  for (int i = 0; i < ell; ++i) {
    minus[static_cast<std::size_t>(i)] -= 1;
    plus[static_cast<std::size_t>(i)] += 1;
  }
  inst.rhs.push_back(RelTerm{1, {}, {desc(minus, 0), desc(plus, off)}});
  for (const auto& [ps, qs] : plucker_tuples(n, d)) {
    int t = static_cast<int>(ps.size());
    Partition added = add_rem(base, BorderOp::Add, ps, qs);
    Partition removed = add_rem(base, BorderOp::Remove, ps, qs);
    inst.rhs.push_back(RelTerm{(t % 2 == 1) ? 1 : -1,
                               {},
                               {desc(added.parts(), 0), desc(removed.parts(), off)}});
  }
  return inst;
}

RelationInstance rectangle_general(int p, int q, int a, int b) {
  if (p < 1 || q < 1 || a < 0 || b < 0 || a > q || a + b > p + 1)
    throw std::invalid_argument("rectangle_general parameters out of range");
  if (a + b == 0)
    throw std::invalid_argument("a + b >= 1 required");
  RelationInstance inst;
  inst.id = "rectangle-general(p=" + std::to_string(p) + ",q=" +
            std::to_string(q) + ",a=" + std::to_string(a) + ",b=" +
            std::to_string(b) + ")";
  auto lk_desc = [](int pp, int qq, int l, int k, int off) -> std::optional<SDescriptor> {
    if (l < 0 || l > pp || k < 0 || k > qq || pp < 0 || qq < 0) return std::nullopt;
    return SDescriptor{rectangle_lk(pp, qq, l, k).parts(), {}, off, false};
  };
  int lhs_sign = (a + b) % 2 == 0 ? 1 : -1;
  auto left0 = lk_desc(p + 1, q + b - 1, 0, 0, 0);
  auto left1 = lk_desc(p - 1, q - a, p - a - b + 1, 0, -1);
  if (left0 && left1)
    inst.lhs.push_back(RelTerm{lhs_sign, {}, {*left0, *left1}});
  inst.rhs.push_back(RelTerm{
      1, {}, {*lk_desc(p, q + b - 1, 0, 0, 0), *lk_desc(p, q - a + 1, 0, 0, -1)}});
  inst.rhs.push_back(RelTerm{
      -1, {}, {*lk_desc(p, q - a, 0, 0, 0), *lk_desc(p, q + b, 0, 0, -1)}});
  for (int t = 0; t <= a + b - 3; ++t) {
    auto f0 = lk_desc(p, q + b - 1, 0, q - a + t + 1, 0);
    auto f1 = lk_desc(p - 1, q - a, p - t - 1, 0, -1);
    if (!f0 || !f1) continue;  // out-of-range decoration: term is 0
    inst.rhs.push_back(RelTerm{(t % 2 == 0) ? -1 : 1, {}, {*f0, *f1}});
  }
  return inst;
}

bool kleber_classical(const Partition& lambda, int d, int n_vars) {
  CornerDecomposition cd = corner_decomposition(lambda);
  int n = cd.n();
  if (d < 1 || d > n) throw std::invalid_argument("invalid corner pivot d");
  int ell = cd.row_indices[static_cast<std::size_t>(d - 1)];
  auto schur = [&](const Partition& p) {
    return classical_schur_ssyt(SkewShape(p), n_vars);
  };
  SparsePoly lhs = schur(lambda) * schur(lambda);
  std::vector<int> minus = lambda.parts(), plus = lambda.parts();
  for (int i = 0; i < ell; ++i) {
    minus[static_cast<std::size_t>(i)] -= 1;
    plus[static_cast<std::size_t>(i)] += 1;
  }
  SparsePoly rhs;
  auto minus_p = Partition::from_sequence(minus);
  auto plus_p = Partition::from_sequence(plus);
  if (minus_p && plus_p) rhs += schur(*minus_p) * schur(*plus_p);
  for (const auto& [ps, qs] : plucker_tuples(n, d)) {
    int t = static_cast<int>(ps.size());
    SparsePoly prod = schur(add_rem(lambda, BorderOp::Add, ps, qs)) *
                      schur(add_rem(lambda, BorderOp::Remove, ps, qs));
    if (t % 2 == 1)
      rhs += prod;
    else
      rhs -= prod;
  }
  return (lhs - rhs).is_zero();
}

}  // namespace nvs
