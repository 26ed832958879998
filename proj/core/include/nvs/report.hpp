#pragma once

#include <string>
#include <vector>

#include "nvs/config.hpp"

namespace nvs {

struct InstanceVerdict {
  std::string id;
  std::string mode;       // "exact", "modular", "numeric"
  bool pass = false;
  std::string detail;     // residual, confidence bound, witness
  double millis = 0.0;
};

struct Report {
  std::string tool_version = "nvs 0.1.0";
  int schema_version = 1;
  std::string config;
  std::vector<InstanceVerdict> verdicts;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  void sort_by_id();
  std::string to_json() const;
  void write_json(const std::string& path) const;
  void print_text(std::ostream& os) const;
};

}  // namespace nvs
