#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "apsum/scan.hpp"

namespace apsum {

enum class ReportFormat { Json, Csv };

std::optional<ReportFormat> format_from_string(std::string_view s);

/// Single object with keys scan_kind, k_range, n_range, records, violations,
/// elapsed_seconds (rounded to milliseconds), worker_count. Big values are
/// decimal strings.
nlohmann::ordered_json report_to_json(const ScanReport& report);

ScanReport report_from_json(const nlohmann::ordered_json& j);

/// Header line plus one row per record; timing is omitted.
std::string report_to_csv(const ScanReport& report);

void emit_report(const ScanReport& report, ReportFormat format, std::ostream& os);

/// Writes to the given path, or to stdout when path is "-".
/// Throws std::runtime_error naming the destination on filesystem errors.
void emit_report(const ScanReport& report, ReportFormat format, const std::string& path);

}  // namespace apsum
