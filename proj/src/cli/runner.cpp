#include <algorithm>
#include <chrono>
#include <cmath>

#include "umbra/cli.hpp"

namespace umbra::cli {

namespace {

VerificationRecord check_point(const IdentityDescriptor& id, const Point& p, const std::string& variant,
                               double tol) {
  VerificationRecord r;
  r.identity_id = id.id;
  r.equation = id.equation;
  r.variant = variant.empty() && !id.variants.empty() ? id.variants.front() : variant;
  r.point = p;
  r.tolerance = tol;

  if (auto why = id.reject(p)) {
    r.status = "rejected";
    r.reason = *why;
    return r;
  }
  const auto t0 = std::chrono::steady_clock::now();
  try {
    // The oracle aims an order of magnitude below the comparison tolerance.
    const Comparison c = evaluate_identity(id, p, variant, 0.1 * tol, oracle::Execution::serial);
    r.closed_form_value = c.closed;
    r.oracle_value = c.oracle;
    r.oracle_cost = c.oracle_evaluations;
    r.oracle_error_estimate = c.oracle_error_estimate;
    const double diff = std::abs(c.closed - c.oracle);
    const double mag = std::abs(c.closed);
    r.absolute = mag < 1e-12;
    r.relative_error = r.absolute ? diff : diff / mag;
    const bool finite = std::isfinite(r.relative_error);
    if (!c.oracle_converged) {
      r.status = "oracle-failure";
      r.reason = "oracle did not converge: " + c.oracle_note;
    } else if (!finite || r.relative_error > tol) {
      r.status = "mismatch";
      r.reason = finite ? "error above tolerance" : "non-finite value";
    } else {
      r.status = "ok";
      r.pass = true;
    }
  } catch (const oracle::OracleError& e) {
    r.status = "oracle-failure";
    r.reason = e.what();
  } catch (const std::exception& e) {
    r.status = "error";
    r.reason = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

std::vector<VerificationRecord> verify_identity(const IdentityDescriptor& id, const GridSpec& grid,
                                                const VerifyOptions& opts) {
  if (!opts.variant.empty()) {
    if (id.variants.empty()) throw UsageError(id.id + " has no variants");
    if (std::find(id.variants.begin(), id.variants.end(), opts.variant) == id.variants.end())
      throw UsageError("unknown variant '" + opts.variant + "' for " + id.id);
  }
  const double tol = opts.tol > 0.0 ? opts.tol : id.default_tol;
  const auto points = grid.points();
  const long n = static_cast<long>(points.size());
  std::vector<VerificationRecord> out(n);
  if (opts.exec == oracle::Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < n; ++i) out[i] = check_point(id, points[i], opts.variant, tol);
  } else {
    for (long i = 0; i < n; ++i) out[i] = check_point(id, points[i], opts.variant, tol);
  }
  return out;
}

}  // namespace umbra::cli
