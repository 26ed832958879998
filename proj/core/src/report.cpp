#include "nvs/report.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace nvs {

int Report::passed() const {
  int n = 0;
  for (const auto& v : verdicts)
    if (v.pass) ++n;
  return n;
}

int Report::failed() const { return static_cast<int>(verdicts.size()) - passed(); }

void Report::sort_by_id() {
  std::stable_sort(verdicts.begin(), verdicts.end(),
                   [](const InstanceVerdict& a, const InstanceVerdict& b) {
                     return a.id < b.id;
                   });
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["tool"] = tool_version;
  j["schema_version"] = schema_version;
  j["config"] = config;
  j["summary"] = {{"total", verdicts.size()},
                  {"passed", passed()},
                  {"failed", failed()}};
  // timings stay out of the artifact so identical config + seed reproduce
  // byte-identical files
  nlohmann::json items = nlohmann::json::array();
  for (const auto& v : verdicts) {
    items.push_back({{"id", v.id},
                     {"mode", v.mode},
                     {"pass", v.pass},
                     {"detail", v.detail}});
  }
  j["verdicts"] = items;
  return j.dump(2);
}

void Report::write_json(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << to_json() << "\n";
}

void Report::print_text(std::ostream& os) const {
  for (const auto& v : verdicts)
    os << (v.pass ? "pass" : "FAIL") << "  " << v.id
       << (v.detail.empty() ? "" : "  [" + v.detail + "]") << "\n";
  os << "total " << verdicts.size() << ", passed " << passed() << ", failed "
     << failed() << "\n";
}

}  // namespace nvs
