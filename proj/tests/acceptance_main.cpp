// Acceptance suite: runs every criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nvs/config.hpp"
#include "nvs/report.hpp"
#include "nvs/suites.hpp"

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  int instances = 0;
  double seconds = 0;
  std::vector<std::string> failures;
};

void absorb(Criterion& c, const std::vector<nvs::InstanceVerdict>& verdicts,
            const std::vector<std::string>& prefixes) {
  for (const auto& v : verdicts) {
    bool match = prefixes.empty();
    for (const auto& p : prefixes)
      if (v.id.rfind(p, 0) == 0) match = true;
    if (!match) continue;
    ++c.instances;
    c.seconds += v.millis / 1000.0;
    if (!v.pass) {
      c.pass = false;
      c.failures.push_back(v.id);
    }
  }
}

}  // namespace

int main() {
  nvs::Config cfg;
  cfg.apply_env_overrides();
  nvs::apply_config(cfg);

  nvs::SuiteOptions exact_small;
  exact_small.max_cells = 9;  // the full (3,3,3) box
  nvs::SuiteOptions exact_full;
  exact_full.max_cells = 25;  // the full (5,5,5,5,5) box
  nvs::SuiteOptions numeric;
  numeric.max_cells = 9;

  auto t0 = std::chrono::steady_clock::now();
  auto ninth = nvs::suite_ninth(exact_small);
  auto minors = nvs::suite_minors(exact_small);
  auto dj = nvs::suite_dj(exact_small);
  auto plucker = nvs::suite_plucker(exact_full);
  auto rectangle = nvs::suite_rectangle(exact_small);
  auto zeta_cor = nvs::suite_zeta_corollaries(numeric);
  auto mzv = nvs::suite_mzv(numeric);
  double total_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();

  std::vector<Criterion> criteria(10);
  criteria[0].name =
      "1: S_minor = det(JT) = det(dual JT) = sign*det(Giambelli), all "
      "shapes in (3,3,3), exact, < 5 min";
  absorb(criteria[0], ninth, {"ninth-routes"});
  double ninth_routes_seconds = criteria[0].seconds;
  if (ninth_routes_seconds > 300) criteria[0].pass = false;

  criteria[1].name =
      "2: Desnanot-Jacobi H/E + rectangle corollary, exact, incl. "
      "(5,4,4,3)/(3,1,1)";
  absorb(criteria[1], dj, {});

  criteria[2].name =
      "3: corner exchange both variants, lambda in (5^5) with <= 3 corners, "
      "all d, exact; classical check with n <= 4 variables";
  absorb(criteria[2], plucker, {});

  criteria[3].name = "4: general rectangle relation, p,q <= 3, all valid (a,b)";
  absorb(criteria[3], rectangle, {});

  criteria[4].name =
      "5: tableau sums = minors of U_M (M <= 3, 10 parameter sets); "
      "Vandermonde route = tableau polynomials";
  absorb(criteria[4], ninth,
         {"tableau-sum", "tableau-variation", "vandermonde", "weyl"});

  criteria[5].name =
      "6: generic minor identities, 50 seeded instances each, residual 0";
  absorb(criteria[5], minors, {});

  criteria[6].name =
      "7: truncation DP = brute force; Schur zeta tableau = determinant "
      "route; finite-M corollaries exact";
  absorb(criteria[6], mzv,
         {"zeta-trunc-dp-vs-brute", "finite-m-stuffle", "schur-zeta-ssyt-vs-det"});
  absorb(criteria[6], zeta_cor, {});

  criteria[7].name =
      "8: word algebra lemmas exact (a+c <= 6); regularize vs closed forms "
      "at 1e-8; decreasing asymptotic residuals";
  absorb(criteria[7], mzv,
         {"shuffle-lemmas", "regularize-basics", "regularize-vs-explicit121",
          "asymptotic-residuals"});

  criteria[8].name =
      "9: displayed rectangle values at 1e-10 (40 digits); checkerboard "
      "identities at 1e-8";
  absorb(criteria[8], mzv,
         {"r33-closed-forms", "rectangle-example-formulas", "checkerboard",
          "c-coefficients", "eta-cache-vs-dp", "zagier-232-vs-dp"});

  criteria[9].name =
      "10: generating-function coefficients at 1e-10; residue-series "
      "checks at 1e-8";
  absorb(criteria[9], mzv, {"genfun-f-121", "phi-residue-series"});

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::printf("%s criterion %s  [%d instances, %.1fs]\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.instances,
                c.seconds);
    for (const auto& f : c.failures) std::printf("       failed: %s\n", f.c_str());
    if (!c.pass) all_pass = false;
    if (c.instances == 0) {
      std::printf("       (no instances matched)\n");
      all_pass = false;
    }
  }
  std::printf("%s  total wall time %.1fs\n",
              all_pass ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL", total_seconds);
  return all_pass ? 0 : 1;
}
