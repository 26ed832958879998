#include "nvs/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nvs/hp.hpp"
#include "nvs/prime_field.hpp"

namespace nvs {

Config Config::load_file(const std::string& path) {
  Config c;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string value;
    ls >> value;
    if (key == "precision") c.precision_digits = std::stoi(value);
    else if (key == "truncation") c.truncation_m = std::stol(value);
    else if (key == "tail_order") c.tail_order = std::stoi(value);
    else if (key == "mzv_match_n") c.mzv_match_n = std::stol(value);
    else if (key == "prime") c.prime_modulus = std::stoull(value);
    else if (key == "trials") c.trials = std::stoi(value);
    else if (key == "seed") c.seed = std::stoull(value);
    else if (key == "context_slack") c.context_slack = std::stoi(value);
    else if (key == "max_cells") c.max_cells = std::stoi(value);
    else if (key == "output") c.output_path = value;
    else throw std::runtime_error("unknown config key " + key);
  }
  return c;
}

void Config::apply_env_overrides() {
  if (const char* p = std::getenv("NVS_PRECISION")) precision_digits = std::atoi(p);
  if (const char* s = std::getenv("NVS_SEED"))
    seed = std::strtoull(s, nullptr, 10);
}

std::string Config::str() const {
  std::ostringstream os;
  os << "precision=" << precision_digits << " truncation=" << truncation_m
     << " tail_order=" << tail_order << " mzv_match_n=" << mzv_match_n
     << " prime=" << prime_modulus << " trials=" << trials << " seed=" << seed
     << " context_slack=" << context_slack << " max_cells=" << max_cells;
  return os.str();
}

Config& global_config() {
  static Config c;
  return c;
}

void apply_config(const Config& c) {
  if (c.precision_digits < 10 || c.truncation_m < 0 || c.trials < 1 ||
      c.tail_order < 1 || c.context_slack < 0)
    throw std::invalid_argument("config values must be positive");
  global_config() = c;
  HP::set_default_digits(c.precision_digits);
  PFElem::set_modulus(c.prime_modulus);
}

}  // namespace nvs
