#pragma once

#include <string>
#include <vector>

#include "raddeg/degrees.hpp"

namespace raddeg {

// one row per clause plus a closing verdict row; fields in this order
struct ReportRecord {
  std::string theorem, fixture, clause, status, data;
};

std::vector<ReportRecord> report_records(const TheoremReport& r, const std::string& fixture);

enum class ReportFormat { text, jsonl };

std::string format_records(const std::vector<ReportRecord>& records, ReportFormat format);
std::string format_reports(const std::vector<TheoremReport>& reports, const std::string& fixture, ReportFormat format);

bool any_violation(const std::vector<TheoremReport>& reports);

}  // namespace raddeg
