#pragma once

#include "json.hpp"
#include <optional>
#include <string>

namespace wiener {

/// Outcome of one identity or inequality check.
///
/// `residual` is the discrepancy that is compared against `tolerance`; for
/// inequalities it is the amount by which the bound is exceeded (<= 0 when
/// the bound holds). Diagnostic reports carry numbers for the record but do
/// not fail a run unless diagnostics are promoted.
struct CheckReport {
  std::string check_id;
  std::string anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool diagnostic = false;
  std::string grid;
  std::string field_id;
  std::string note;

  /// Sets `pass` from residual <= tolerance (NaN never passes).
  CheckReport& decide();
};

/// Relative discrepancy |a - b| / scale, with 0/0 taken as 0.
double relative_discrepancy(double difference, double scale);

CheckReport make_report(std::string check_id, std::string anchor, double lhs, double rhs, double residual,
                        double tolerance);

nlohmann::json to_json(const CheckReport& r);
CheckReport report_from_json(const nlohmann::json& j);

}  // namespace wiener
