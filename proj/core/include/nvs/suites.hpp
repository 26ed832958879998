#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nvs/report.hpp"

namespace nvs {

struct SuiteOptions {
  std::string mode = "exact";  // "exact" or "modular"
  std::uint64_t seed = 1;
  int trials = 20;
  int max_cells = 12;   // weight cap for enumerated shape suites
  int slack = 4;
  long truncation_m = 100000;
  long mzv_match_n = 2000;
};

std::vector<std::string> suite_names();
bool is_suite_name(const std::string& name);

// Runs one named suite ("all" runs every suite) and returns the report.
Report run_suite(const std::string& name, const SuiteOptions& opt);

std::vector<InstanceVerdict> suite_minors(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_ninth(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_dj(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_giambelli(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_plucker(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_rectangle(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_zeta_corollaries(const SuiteOptions& opt);
std::vector<InstanceVerdict> suite_mzv(const SuiteOptions& opt);

}  // namespace nvs
