#pragma once

#include <cstdint>
#include <string>

namespace nvs {

struct Config {
  int precision_digits = 40;
  long truncation_m = 100000;   // DP truncation for numeric checks
  int tail_order = 8;           // Euler-Maclaurin correction order
  long mzv_match_n = 2000;      // matching point for the asymptotic engine
  std::uint64_t prime_modulus = 4611686018427387847ULL;
  int trials = 20;
  std::uint64_t seed = 1;
  int context_slack = 4;
  int max_cells = 12;           // suite size cap
  std::string output_path;

  // simple "key value" lines; '#' comments
  static Config load_file(const std::string& path);
  void apply_env_overrides();   // NVS_PRECISION, NVS_SEED
  std::string str() const;
};

Config& global_config();
void apply_config(const Config& c);  // pushes precision/modulus process-wide

}  // namespace nvs
