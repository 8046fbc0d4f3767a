#pragma once

// Verification harness behind the `umbra` command-line tool: parameter
// grids, identity evaluation (closed form against oracle), reports.

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/closedforms.hpp"
#include "umbra/oracle.hpp"

namespace umbra::cli {

using closedforms::IdentityDescriptor;
using closedforms::Point;

class UsageError : public Error {
public:
  using Error::Error;
};

// Grids ---------------------------------------------------------------------------

struct GridAxis {
  std::string name;
  std::vector<double> values;
};

/// Cartesian grid. Text form: axes separated by ';', each either
/// `k=v1,v2,...` or `k=min:max:n` (n points, endpoints included).
struct GridSpec {
  std::vector<GridAxis> axes;

  static GridSpec parse(std::string_view text);
  /// Replaces (or adds) the axes named in `over`.
  void merge(const GridSpec& over);
  bool has(std::string_view name) const;
  /// Points in lexicographic order, first axis slowest.
  std::vector<Point> points() const;
};

/// Key-value config: `key = value` per line, '#' comments. Recognized keys
/// are `grid.<id>`, `tol.<id>`, `variant.<id>`, `format` and `out`.
std::map<std::string, std::string> load_config(const std::string& path);
std::map<std::string, std::string> parse_config(std::string_view text);

// Identity evaluation ----------------------------------------------------------

struct Comparison {
  complex closed = 0.0;
  complex oracle = 0.0;
  long oracle_evaluations = 0;
  double oracle_error_estimate = 0.0;
  bool oracle_converged = false;
  std::string oracle_note;
};

/// Evaluates both sides at one point. The oracle side uses only the
/// quadrature engine and the reference functions. `oracle_tol` is the
/// absolute/relative target handed to the quadrature.
Comparison evaluate_identity(const IdentityDescriptor& id, const Point& p,
                             const std::string& variant, double oracle_tol,
                             oracle::Execution exec = oracle::Execution::parallel);

// Reports ---------------------------------------------------------------------------

struct VerificationRecord {
  std::string identity_id;
  std::string equation;
  std::string variant;
  Point point;
  complex closed_form_value = 0.0;
  complex oracle_value = 0.0;
  double relative_error = 0.0;
  bool absolute = false;  // compared absolutely because |closed| < 1e-12
  double tolerance = 0.0;
  bool pass = false;
  long oracle_cost = 0;
  double oracle_error_estimate = 0.0;
  double seconds = 0.0;
  std::string status;  // "ok", "mismatch", "rejected", "oracle-failure", "error"
  std::string reason;
};

std::string to_jsonl(const VerificationRecord& r);
std::string csv_header();
std::string to_csv(const VerificationRecord& r);
void write_records(std::ostream& os, const std::vector<VerificationRecord>& recs,
                   const std::string& format);

// Runner ----------------------------------------------------------------------------

struct VerifyOptions {
  double tol = 0.0;  // 0: the identity's default
  std::string variant;
  oracle::Execution exec = oracle::Execution::parallel;
};

/// Compares closed form and oracle at every grid point. Records come back
/// in grid order whatever the execution mode.
std::vector<VerificationRecord> verify_identity(const IdentityDescriptor& id, const GridSpec& grid,
                                                const VerifyOptions& opts);

/// Entry point of the command-line tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace umbra::cli
