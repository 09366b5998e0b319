// Text and JSON rendering of verification reports.
#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "laxlab/verify.hpp"

namespace laxlab {

using ordered_json = nlohmann::ordered_json;

/// Wall time is left out unless asked for, so identical runs serialize identically.
inline ordered_json to_json(const VerificationReport& r, bool with_time = false) {
  ordered_json j;
  j["case"] = r.case_id;
  j["title"] = r.title;
  j["status"] = status_name(r.status);
  j["equations"] = ordered_json::array();
  for (const auto& e : r.equations)
    j["equations"].push_back({{"provenance", e.provenance},
                              {"expression", e.expression},
                              {"matched_target", e.matched_target},
                              {"difference", e.difference}});
  j["comparisons"] = ordered_json::array();
  for (const auto& c : r.comparisons)
    j["comparisons"].push_back({{"label", c.label},
                                {"target", c.target},
                                {"expectation", expectation_name(c.expect)},
                                {"matched", c.matched},
                                {"source", c.source},
                                {"difference", c.difference}});
  j["values"] = ordered_json::object();
  for (const auto& [k, v] : r.values) j["values"][k] = v;
  j["notes"] = r.notes;
  if (with_time) j["wall_time"] = r.wall_time;
  return j;
}

inline std::string to_text(const VerificationReport& r, bool with_time = false) {
  std::ostringstream os;
  os << "== " << r.case_id << ": " << r.title << "\n";
  os << "status: " << status_name(r.status) << "\n";
  os << "extracted equations:\n";
  for (const auto& e : r.equations) {
    os << "  [" << e.provenance << "] " << e.expression << " = 0\n";
    if (!e.matched_target.empty()) os << "      matches " << e.matched_target << "\n";
    else if (!e.difference.empty()) os << "      closest difference " << e.difference << "\n";
  }
  os << "comparisons:\n";
  for (const auto& c : r.comparisons) {
    os << "  " << (c.matched ? "ok  " : "DIFF") << " (" << expectation_name(c.expect) << ") " << c.label;
    if (!c.target.empty()) os << " vs " << c.target;
    os << "\n";
    if (!c.matched) os << "      difference: " << c.difference << "\n";
  }
  if (!r.values.empty()) {
    os << "values:\n";
    for (const auto& [k, v] : r.values) os << "  " << k << ": " << v << "\n";
  }
  if (!r.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : r.notes) os << "  - " << n << "\n";
  }
  if (with_time) os << "wall time: " << std::fixed << std::setprecision(3) << r.wall_time << " s\n";
  return os.str();
}

inline std::string summary_table(const std::vector<VerificationReport>& rs) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "case" << std::setw(22) << "status" << "comparisons (ok/total)\n";
  for (const auto& r : rs) {
    std::size_t ok = 0;
    for (const auto& c : r.comparisons) ok += c.matched;
    os << std::setw(16) << r.case_id << std::setw(22) << status_name(r.status) << ok << "/" << r.comparisons.size()
       << "\n";
  }
  return os.str();
}

}  // namespace laxlab
