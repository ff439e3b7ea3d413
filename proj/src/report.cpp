#include "raddeg/report.hpp"

#include <json.hpp>

namespace raddeg {

std::vector<ReportRecord> report_records(const TheoremReport& r, const std::string& fixture) {
  std::vector<ReportRecord> out;
  for (const auto& c : r.clauses)
    out.push_back({r.theorem, fixture, r.subject + ": " + (c.hypothesis ? "hypothesis " : "") + c.name,
                   status_name(c.status), c.data});
  out.push_back({r.theorem, fixture, r.subject + ": verdict", verdict_name(r.verdict), ""});
  return out;
}

std::string format_records(const std::vector<ReportRecord>& records, ReportFormat format) {
  std::string s;
  for (const auto& r : records) {
    if (format == ReportFormat::jsonl) {
      nlohmann::ordered_json j;
      j["theorem"] = r.theorem;
      j["fixture"] = r.fixture;
      j["clause"] = r.clause;
      j["status"] = r.status;
      j["data"] = r.data;
      s += j.dump() + "\n";
    } else {
      s += r.theorem + " | " + r.fixture + " | " + r.clause + " | " + r.status;
      if (!r.data.empty()) s += " | " + r.data;
      s += "\n";
    }
  }
  return s;
}

std::string format_reports(const std::vector<TheoremReport>& reports, const std::string& fixture, ReportFormat format) {
  std::vector<ReportRecord> all;
  for (const auto& r : reports) {
    auto rec = report_records(r, fixture);
    all.insert(all.end(), rec.begin(), rec.end());
  }
  return format_records(all, format);
}

bool any_violation(const std::vector<TheoremReport>& reports) {
  for (const auto& r : reports)
    if (r.verdict == Verdict::violation) return true;
  return false;
}

}  // namespace raddeg
