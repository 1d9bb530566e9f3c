#pragma once
// JSON rendering of certificates. Field order is fixed; every number except
// timings is an exact integer. docs/report.schema.json describes the layout.

#include <string>

#include "json.hpp"
#include "qtilt/cluster.hpp"

namespace qtilt {

inline constexpr const char* kReportSchema = "qtilt-report/1";
inline constexpr const char* kToolVersion = "0.1.0";

struct ReportOptions {
  bool timings = true;      // include "timings" and "environment"
  unsigned threads = 0;     // echoed in "environment"
};

nlohmann::ordered_json certificate_report(const Certificate& cert, const ReportOptions& opts = {});

/// Copy of a report without the schedule-dependent sections.
nlohmann::ordered_json strip_volatile(nlohmann::ordered_json report);

/// Short human-readable summary.
std::string certificate_summary(const Certificate& cert);

}  // namespace qtilt
