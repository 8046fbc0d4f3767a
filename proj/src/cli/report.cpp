#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "umbra/cli.hpp"

namespace umbra::cli {

namespace {

using nlohmann::ordered_json;

ordered_json cjson(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_jsonl(const VerificationRecord& r) {
  ordered_json point = ordered_json::object();
  for (const auto& [k, v] : r.point) point[k] = v;
  ordered_json j;
  j["identity_id"] = r.identity_id;
  j["equation"] = r.equation;
  j["variant"] = r.variant;
  j["point"] = point;
  j["closed_form_value"] = cjson(r.closed_form_value);
  j["oracle_value"] = cjson(r.oracle_value);
  j["relative_error"] = r.relative_error;
  j["comparison"] = r.absolute ? "absolute" : "relative";
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["oracle_cost"] = r.oracle_cost;
  j["oracle_error_estimate"] = r.oracle_error_estimate;
  j["timing_s"] = r.seconds;
  j["status"] = r.status;
  j["reason"] = r.reason;
  return j.dump();
}

std::string csv_header() {
  return "identity_id,equation,variant,point,closed_re,closed_im,oracle_re,oracle_im,"
         "relative_error,comparison,tolerance,pass,oracle_cost,oracle_error_estimate,timing_s,"
         "status,reason";
}

std::string to_csv(const VerificationRecord& r) {
  std::string point;
  for (const auto& [k, v] : r.point) {
    if (!point.empty()) point += ';';
    point += k + "=" + num(v);
  }
  std::ostringstream os;
  os << csv_field(r.identity_id) << ',' << csv_field(r.equation) << ',' << csv_field(r.variant) << ','
     << csv_field(point) << ',' << num(r.closed_form_value.real()) << ','
     << num(r.closed_form_value.imag()) << ',' << num(r.oracle_value.real()) << ','
     << num(r.oracle_value.imag()) << ',' << num(r.relative_error) << ','
     << (r.absolute ? "absolute" : "relative") << ',' << num(r.tolerance) << ','
     << (r.pass ? "true" : "false") << ',' << r.oracle_cost << ',' << num(r.oracle_error_estimate)
     << ',' << num(r.seconds) << ',' << r.status << ',' << csv_field(r.reason);
  return os.str();
}

void write_records(std::ostream& os, const std::vector<VerificationRecord>& recs,
                   const std::string& format) {
  if (format == "csv") {
    os << csv_header() << '\n';
    for (const auto& r : recs) os << to_csv(r) << '\n';
  } else if (format == "jsonl") {
    for (const auto& r : recs) os << to_jsonl(r) << '\n';
  } else {
    throw UsageError("unknown report format '" + format + "' (jsonl or csv)");
  }
}

}  // namespace umbra::cli
