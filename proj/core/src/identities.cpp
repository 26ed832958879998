#include "nvs/identities.hpp"

#include <set>

namespace nvs {

Verdict identity_verdict_exact(const SparsePoly& lhs, const SparsePoly& rhs) {
  Verdict v;
  v.kind = (lhs - rhs).is_zero() ? VerdictKind::ProvedEqual : VerdictKind::Unequal;
  if (v.kind == VerdictKind::Unequal) v.witness = "nonzero difference polynomial";
  return v;
}

Verdict identity_verdict_modular(const SparsePoly& lhs, const SparsePoly& rhs,
                                 std::uint64_t seed, int trials) {
  std::set<std::uint32_t> vars;
  for (const auto& [m, c] : lhs.terms())
    for (auto [v, e] : m.factors) vars.insert(v);
  for (const auto& [m, c] : rhs.terms())
    for (auto [v, e] : m.factors) vars.insert(v);
  std::uint32_t deg = std::max(lhs.total_degree(), rhs.total_degree());
  RationalSampler sampler(seed);
  Verdict verdict;
  verdict.kind = VerdictKind::EqualWithConfidence;
  verdict.trials = trials;
  verdict.seed = seed;
  verdict.per_trial_bound =
      static_cast<double>(deg) / static_cast<double>(PFElem::modulus());
  for (int t = 0; t < trials; ++t) {
    std::map<std::uint32_t, PFElem> point;
    for (std::uint32_t v : vars)
      point.emplace(v, PFElem::from_u64(sampler.next_u64()));
    auto at = [&](std::uint32_t v) { return point.at(v); };
    PFElem l = lhs.eval<PFElem>(at);
    PFElem r = rhs.eval<PFElem>(at);
    if (l != r) {
      verdict.kind = VerdictKind::Unequal;
      std::string w = "trial " + std::to_string(t) + ": ";
      for (std::uint32_t v : vars)
        w += var_name(v) + "=" + std::to_string(point.at(v).value()) + " ";
      verdict.witness = w;
      return verdict;
    }
  }
  if (lhs == rhs) verdict.kind = VerdictKind::ProvedEqual;
  return verdict;
}

}  // namespace nvs
