#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"
#include "rigidity/bounds.hpp"
#include "rigidity/reductions.hpp"

namespace rigidity {

/// Report fields in the fixed column order. Rationals are written as exact
/// strings ("8/5"); runtime_ms is null (JSON) or empty (CSV) unless timed.
nlohmann::ordered_json report_to_json(const BoundReport& r);
std::string report_csv_header();
std::string report_csv_row(const BoundReport& r);

enum class ReportFormat { json, csv, text };

/// JSON lines, CSV with a header row, or one human-readable line per report.
void write_reports(std::ostream& out, std::span<const BoundReport> reports, ReportFormat format);

nlohmann::ordered_json step_to_json(const ReductionStep& step);
nlohmann::ordered_json trace_to_json(const ReductionTrace& trace);
nlohmann::ordered_json certificate_to_json(const StressCertificate& cert);
/// Rebuilds a step from step_to_json output. Throws std::invalid_argument on bad input.
ReductionStep step_from_json(const nlohmann::ordered_json& j);

}  // namespace rigidity
