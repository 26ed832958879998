#include "nvs/mzv_num.hpp"

#include <stdexcept>

#include "nvs/zeta_trunc.hpp"

namespace nvs {

HP LogExpansion::eval(const HP& logn, const HP& inv_n) const {
  HP acc(0L), pw(1L);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].c.empty()) acc += p[i].eval(logn) * pw;
    pw *= inv_n;
  }
  return acc;
}

namespace {

std::vector<Rational> bernoulli_numbers(int count) {
  // B_0..B_{count-1} via sum_{j=0}^{m} C(m+1,j) B_j = 0
  std::vector<Rational> b(static_cast<std::size_t>(count));
  for (int m = 0; m < count; ++m) {
    if (m == 0) {
      b[0] = 1;
      continue;
    }
    Rational acc(0);
    for (int j = 0; j < m; ++j)
      acc += binomial_rat(m + 1, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / binomial_rat(m + 1, m);
  }
  return b;
}

// One derivative step on a bag of terms coef * L^j / n^s.
using TermBag = std::map<std::pair<int, int>, HP>;  // (j, s) -> coef

TermBag derivative(const TermBag& in) {
  TermBag out;
  for (const auto& [js, c] : in) {
    auto [j, s] = js;
    if (j > 0) out[{j - 1, s + 1}] += c * HP(static_cast<long>(j));
    out[{j, s + 1}] += c * HP(static_cast<long>(-s));
  }
  return out;
}

}  // namespace

MzvEngine::MzvEngine(long match_n, int em_order)
    : match_n_(match_n), em_order_(em_order), iorder_(em_order + 4) {
  auto b = bernoulli_numbers(2 * em_order_ + 2);
  Rational fact(1);
  for (int t = 1; t <= em_order_; ++t) {
    for (int k = 2 * t - 1; k <= 2 * t; ++k) fact *= k;
    bern_factor_.push_back(HP(b[static_cast<std::size_t>(2 * t)] / fact));
  }
}

void MzvEngine::em_sum_term(LogExpansion& psi, int j, int s,
                            const HP& kappa) const {
  // indefinite Euler-Maclaurin sum of f(m) = L^j / m^s up to n
  if (s == 1) {
    psi.add(0, j + 1, kappa / HP(static_cast<long>(j + 1)));
  } else {
    // integral: I(j,s) = -L^j/((s-1) n^{s-1}) + (j/(s-1)) I(j-1, s)
    HP c = kappa;
    for (int jj = j; jj >= 0; --jj) {
      psi.add(s - 1, jj, -c / HP(static_cast<long>(s - 1)));
      c = c * HP(static_cast<long>(jj)) / HP(static_cast<long>(s - 1));
    }
  }
  psi.add(s, j, kappa / HP(2L));  // f(n)/2
  TermBag bag;
  bag[{j, s}] = kappa;
  for (int t = 1; t <= em_order_; ++t) {
    bag = derivative(bag);  // now f^{(2t-1)}
    for (const auto& [js, c] : bag) {
      if (js.second <= iorder_) psi.add(js.second, js.first, c * bern_factor_[static_cast<std::size_t>(t - 1)]);
    }
    bag = derivative(bag);  // advance to f^{(2t)} for the next round
  }
}

LogExpansion MzvEngine::extend(const LogExpansion& parent, int k_last,
                               const ZWord& full) {
  const int I = iorder_;
  // lambda = log(1 - 1/m) and its powers, as L-free expansions
  int max_ldeg = 0;
  for (const auto& lp : parent.p) max_ldeg = std::max(max_ldeg, lp.degree());
  std::vector<LogExpansion> lampow;
  lampow.emplace_back(I);
  lampow[0].add(0, 0, HP(1L));
  LogExpansion lambda(I);
  for (int t = 1; t <= I; ++t)
    lambda.add(t, 0, HP(-1L) / HP(static_cast<long>(t)));
  for (int e = 1; e <= max_ldeg; ++e) {
    LogExpansion next(I);
    const LogExpansion& prev = lampow.back();
    for (int i1 = 0; i1 <= I; ++i1) {
      if (prev.p[static_cast<std::size_t>(i1)].c.empty()) continue;
      HP c1 = prev.p[static_cast<std::size_t>(i1)].c[0];
      for (int i2 = 1; i1 + i2 <= I; ++i2)
        next.add(i1 + i2, 0,
                 c1 * lambda.p[static_cast<std::size_t>(i2)].c[0]);
    }
    lampow.push_back(next);
  }
  // composed = parent evaluated at m-1, in terms of log m and 1/m
  LogExpansion composed(I);
  std::vector<Rational> binom_row;
  for (int i = 0; i <= parent.order() && i <= I; ++i) {
    const LPoly& P = parent.p[static_cast<std::size_t>(i)];
    if (P.c.empty()) continue;
    // (m-1)^{-i} = sum_{t>=0} C(i-1+t, t) m^{-(i+t)}
    std::vector<HP> invpow(static_cast<std::size_t>(I) + 1, HP(0L));
    if (i == 0) {
      invpow[0] = HP(1L);
    } else {
      for (int t = 0; i + t <= I; ++t)
        invpow[static_cast<std::size_t>(i + t)] = HP(binomial_rat(i - 1 + t, t));
    }
    for (int j = 0; j <= P.degree(); ++j) {
      const HP& cj = P.c[static_cast<std::size_t>(j)];
      if (cj.is_zero()) continue;
      for (int e = 0; e <= j; ++e) {
        HP coef = cj * HP(binomial_rat(j, e));
        // L^{j-e} * lambda^e * (m-1)^{-i}
        const LogExpansion& le = lampow[static_cast<std::size_t>(e)];
        for (int i1 = 0; i1 <= I; ++i1) {
          if (le.p[static_cast<std::size_t>(i1)].c.empty()) continue;
          HP c1 = coef * le.p[static_cast<std::size_t>(i1)].c[0];
          for (int i2 = 0; i1 + i2 <= I; ++i2) {
            if (invpow[static_cast<std::size_t>(i2)].is_zero()) continue;
            composed.add(i1 + i2, j - e,
                         c1 * invpow[static_cast<std::size_t>(i2)]);
          }
        }
      }
    }
  }
  // g(m) = m^{-k_last} * composed; indefinite sum by Euler-Maclaurin
  LogExpansion psi(I);
  for (int i = 0; i <= I; ++i) {
    const LPoly& G = composed.p[static_cast<std::size_t>(i)];
    for (int j = 0; j <= G.degree(); ++j) {
      const HP& c = G.c[static_cast<std::size_t>(j)];
      if (!c.is_zero()) em_sum_term(psi, j, i + k_last, c);
    }
  }
  // integration constant from an exact truncation at the match point
  HP exact = zeta_trunc_hp(full, match_n_, /*star=*/false);
  HP logn = HP::log_of(match_n_);
  HP inv_n = HP(1L) / HP(match_n_);
  HP c0 = exact - psi.eval(logn, inv_n);
  psi.add(0, 0, c0);
  return psi;
}

const LogExpansion& MzvEngine::expansion(const ZWord& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;
  LogExpansion result(iorder_);
  if (w.empty()) {
    result.add(0, 0, HP(1L));
  } else {
    ZWord head(w.begin(), w.end() - 1);
    const LogExpansion& parent = expansion(head);
    result = extend(parent, w.back(), w);
  }
  return cache_.emplace(w, std::move(result)).first->second;
}

HP MzvEngine::zeta(const ZWord& w) {
  if (!is_admissible(w))
    throw std::invalid_argument("zeta of a non-admissible word " + zword_str(w));
  const LogExpansion& e = expansion(w);
  return e.p[0].c.empty() ? HP(0L) : e.p[0].c[0];
}

HP MzvEngine::zeta_star(const ZWord& w) {
  if (w.empty()) return HP(1L);
  if (w.back() < 2)
    throw std::invalid_argument("divergent star word " + zword_str(w));
  // sum over all ways of merging adjacent entries
  HP acc(0L);
  std::size_t gaps = w.size() - 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << gaps); ++mask) {
    ZWord merged;
    int run = w[0];
    for (std::size_t g = 0; g < gaps; ++g) {
      if (mask & (std::size_t{1} << g)) {
        run += w[g + 1];
      } else {
        merged.push_back(run);
        run = w[g + 1];
      }
    }
    merged.push_back(run);
    acc += zeta(merged);
  }
  return acc;
}

HP MzvEngine::zstar_at(const ZWord& w, const HP& t) {
  const LogExpansion& e = expansion(w);
  return e.p[0].eval(t - HP::euler_gamma());
}

HP MzvEngine::eval_combo(const std::map<ZWord, Rational>& combo) {
  HP acc(0L);
  for (const auto& [w, c] : combo) acc += HP(c) * zeta(w);
  return acc;
}

HP MzvEngine::eval_regpoly(const RegPolynomial& rp, const HP& t) {
  HP acc(0L), pw(1L);
  for (const auto& combo : rp.coeff) {
    acc += eval_combo(combo.terms) * pw;
    pw *= t;
  }
  return acc;
}

MzvEngine& default_mzv_engine() {
  static MzvEngine engine;
  return engine;
}

std::vector<HP> asymptotic_residuals(const ZWord& k,
                                     const std::vector<long>& truncations,
                                     MzvEngine& engine) {
  RegPolynomial reg = regularize(k, RegSide::Stuffle);
  std::vector<HP> out;
  for (long m : truncations) {
    HP t = HP::log_of(m) + HP::euler_gamma();
    out.push_back(
        (zeta_trunc_hp(k, m, false) - engine.eval_regpoly(reg, t)).abs());
  }
  return out;
}

}  // namespace nvs
