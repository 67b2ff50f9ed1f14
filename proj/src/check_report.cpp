#include "wiener/check_report.hpp"

#include <cmath>
#include <limits>

namespace wiener {

CheckReport& CheckReport::decide() {
  pass = !std::isnan(residual) && residual <= tolerance;
  return *this;
}

double relative_discrepancy(double difference, double scale) {
  difference = std::abs(difference);
  if (difference == 0.0) return 0.0;
  if (scale == 0.0) return std::numeric_limits<double>::infinity();
  return difference / std::abs(scale);
}

CheckReport make_report(std::string check_id, std::string anchor, double lhs, double rhs, double residual,
                        double tolerance) {
  CheckReport r;
  r.check_id = std::move(check_id);
  r.anchor = std::move(anchor);
  r.lhs = lhs;
  r.rhs = rhs;
  r.residual = residual;
  r.tolerance = tolerance;
  r.decide();
  return r;
}

namespace {

// JSON has no NaN/Inf; encode them as strings so reports stay parseable.
nlohmann::json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

double read_number(const nlohmann::json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  return -std::numeric_limits<double>::infinity();
}

}  // namespace

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["anchor"] = r.anchor;
  j["lhs"] = number(r.lhs);
  j["rhs"] = number(r.rhs);
  j["residual"] = number(r.residual);
  j["tol"] = number(r.tolerance);
  j["pass"] = r.pass;
  j["diagnostic"] = r.diagnostic;
  j["grid"] = r.grid;
  j["field_id"] = r.field_id;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.anchor = j.at("anchor").get<std::string>();
  r.lhs = read_number(j.at("lhs"));
  r.rhs = read_number(j.at("rhs"));
  r.residual = read_number(j.at("residual"));
  r.tolerance = read_number(j.at("tol"));
  r.pass = j.at("pass").get<bool>();
  r.diagnostic = j.value("diagnostic", false);
  r.grid = j.at("grid").get<std::string>();
  r.field_id = j.at("field_id").get<std::string>();
  r.note = j.value("note", "");
  return r;
}

}  // namespace wiener
