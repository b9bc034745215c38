#ifndef OSP_REPORT_HPP
#define OSP_REPORT_HPP

// Suite reports and their JSON / markdown rendering. Reports are
// deterministic for a fixed (N, m, K, seed): timing is only emitted when
// explicitly requested, so identical configurations give identical bytes.

#include <string>
#include <vector>

#include "json.hpp"

namespace osp {

struct Failure {
  std::string relation;
  std::vector<int> indices;
  std::string residual_terms;
};

struct SuiteReport {
  std::string suite;
  int N = 0, m = 0, K = 0;
  std::string status = "pass";
  long instances_checked = 0;
  std::vector<Failure> failures;
  long millis = 0;

  bool passed() const { return failures.empty(); }
};

inline nlohmann::ordered_json report_json(const SuiteReport& r,
                                          bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["N"] = r.N;
  j["m"] = r.m;
  j["K"] = r.K;
  j["status"] = r.status;
  j["instances_checked"] = r.instances_checked;
  j["failures"] = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json jf;
    jf["relation"] = f.relation;
    jf["indices"] = f.indices;
    jf["residual_terms"] = f.residual_terms;
    j["failures"].push_back(jf);
  }
  j["millis"] = with_timing ? r.millis : 0;
  return j;
}

inline std::string render_json(const std::vector<SuiteReport>& rs,
                               bool with_timing) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(report_json(r, with_timing));
  return arr.dump(2) + "\n";
}

inline std::string render_markdown(const std::vector<SuiteReport>& rs,
                                   bool with_timing) {
  std::string out = "# Verification report\n\n";
  out += "| suite | N | m | K | status | instances | failures |";
  out += with_timing ? " millis |\n" : "\n";
  out += "|---|---|---|---|---|---|---|";
  out += with_timing ? "---|\n" : "\n";
  for (const auto& r : rs) {
    out += "| " + r.suite + " | " + std::to_string(r.N) + " | " +
           std::to_string(r.m) + " | " + std::to_string(r.K) + " | " +
           r.status + " | " + std::to_string(r.instances_checked) + " | " +
           std::to_string(r.failures.size()) + " |";
    out += with_timing ? (" " + std::to_string(r.millis) + " |\n") : "\n";
  }
  for (const auto& r : rs) {
    if (r.failures.empty()) continue;
    out += "\n## " + r.suite + " failures\n\n";
    for (const auto& f : r.failures) {
      out += "- `" + f.relation + "` at (";
      for (size_t t = 0; t < f.indices.size(); ++t)
        out += (t ? "," : "") + std::to_string(f.indices[t]);
      out += "): " + f.residual_terms + "\n";
    }
  }
  return out;
}

}  // namespace osp

#endif  // OSP_REPORT_HPP
