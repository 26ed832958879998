#include "nvs/zeta_trunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace nvs {

Rational zeta_trunc(const ZWord& idx, long M, bool star) {
  if (M < 0) throw std::invalid_argument("negative truncation");
  if (idx.empty()) return Rational(1);
  std::size_t mm = static_cast<std::size_t>(M);
  // cur[m] = sum over chains with last element exactly m
  std::vector<Rational> cur(mm + 1, Rational(0));
  bool first = true;
  for (int s : idx) {
    if (s < 1) throw std::invalid_argument("index entries must be positive");
    std::vector<Rational> next(mm + 1, Rational(0));
    Rational run(0);
    for (std::size_t m = 1; m <= mm; ++m) {
      Rational avail = first ? Rational(1) : run;
      if (star && !first) avail += cur[m];
      Rational p(1);
      for (int e = 0; e < s; ++e) p *= static_cast<long>(m);
      next[m] = avail / p;
      if (!first) run += cur[m];
    }
    cur = next;
    first = false;
  }
  Rational total(0);
  for (std::size_t m = 1; m <= mm; ++m) total += cur[m];
  return total;
}

HP zeta_trunc_hp(const ZWord& idx, long M, bool star) {
  std::vector<long> ns{M};
  return zeta_trunc_hp_at(idx, ns, star)[0];
}

std::vector<HP> zeta_trunc_hp_at(const ZWord& idx, const std::vector<long>& ns,
                                 bool star) {
  if (ns.empty()) return {};
  long M = *std::max_element(ns.begin(), ns.end());
  if (M < 0) throw std::invalid_argument("negative truncation");
  std::size_t mm = static_cast<std::size_t>(M);
  std::vector<HP> cur(mm + 1, HP(0L));
  for (std::size_t m = 1; m <= mm; ++m) cur[m] = HP(1L);
  bool first = true;
  for (int s : idx) {
    if (s < 1) throw std::invalid_argument("index entries must be positive");
    std::vector<HP> next(mm + 1, HP(0L));
    HP run(0L);
    for (std::size_t m = 1; m <= mm; ++m) {
      HP avail = first ? HP(1L) : run;
      if (star && !first) avail += cur[m];
      next[m] = avail / HP(static_cast<long>(m)).pow_int(s);
      if (!first) run += cur[m];
    }
    cur = next;
    first = false;
  }
  // partial sums at the requested truncation points
  std::vector<long> sorted = ns;
  std::sort(sorted.begin(), sorted.end());
  std::vector<HP> out;
  HP total(0L);
  std::size_t m = 1;
  for (long n : sorted) {
    for (; m <= static_cast<std::size_t>(n); ++m)
      total += idx.empty() ? HP(0L) : cur[m];
    out.push_back(idx.empty() ? HP(1L) : total);
  }
  return out;
}

}  // namespace nvs
