#pragma once

// Independent numerical ground truth. Nothing in here may depend on the
// umbral or closed-form code; integrands are supplied by the caller.

#include <complex>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "umbra/error.hpp"
#include "umbra/series.hpp"

namespace umbra::oracle {

/// Integrands must be safe to call concurrently.
using Integrand = std::function<complex(double)>;

struct RegularizationTrace {
  std::vector<double> epsilons;   // strictly decreasing
  std::vector<complex> values;    // damped integral at each epsilon
  std::vector<complex> estimates; // extrapolation through the first j+1 rungs
  std::vector<double> residuals;  // |estimates[j] - estimates[j-1]|, j >= 1
  complex extrapolated = 0.0;
  double residual = 0.0;          // last entry of `residuals`
};

struct QuadratureResult {
  complex value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
  int intervals = 0;
  bool converged = false;
  std::string note;
  std::optional<RegularizationTrace> trace;

  /// Returns `value`, or throws OracleError when the run did not converge.
  complex require() const;
};

class OracleError : public Error {
public:
  OracleError(const std::string& what, QuadratureResult partial)
      : Error(what), partial_(std::move(partial)) {}
  const QuadratureResult& partial() const noexcept { return partial_; }

private:
  QuadratureResult partial_;
};

/// Subdivision stops once the error estimate is below max(abs_tol,
/// rel_tol |value|) or sits at the rounding floor of int |f|. Only the
/// first counts as converged unless `floor_converges` is set.
struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_intervals = 4000;
  bool floor_converges = false;

  /// Absolute tolerance only: converged then means estimate <= tol.
  static QuadratureOptions from_tol(double tol) { return {tol, 0.0, 4000, false}; }
};

enum class Execution { serial, parallel };

// Adaptive Gauss-Kronrod (10/21) --------------------------------------------------

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol);
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts);

/// Sum of adaptive integrals over consecutive panels [edges[i], edges[i+1]].
/// The parallel version distributes panels over OpenMP threads but adds the
/// panel values in order, so both executions give bit-identical results.
QuadratureResult integrate_panels(const Integrand& f, std::span<const double> edges,
                                  const QuadratureOptions& per_panel,
                                  Execution exec = Execution::parallel);

// Regularized infinite ranges --------------------------------------------------------

enum class Damping { none, exp_extrapolated };

struct LadderOptions {
  std::vector<double> epsilons{0.2, 0.1, 0.05, 0.025, 0.0125};
  /// Tolerance of each damped integral (well below the extrapolation error).
  double rung_tol = 1e-11;
  /// Panel width for the damped half-line integrals (one oscillation period).
  double period = 6.283185307179586;
  Execution exec = Execution::parallel;
  /// While the extrapolation residual is above tolerance, up to this many
  /// extra rungs (each half the previous) are appended.
  int max_extra_rungs = 3;
};

struct HalfLineOptions {
  double lower = 0.0;
  Damping damping = Damping::none;
  LadderOptions ladder;
};

/// int_lower^inf f(x) dx. Undamped: [lower, lower+1] directly, the rest
/// through x = lower + e^s, s = v/(1-v), which copes with algebraic tails.
/// Damped: int f(x) e^{-eps (x - lower)} dx on the epsilon ladder, then
/// polynomial extrapolation to eps = 0 (trace attached).
QuadratureResult integrate_half_line(const Integrand& f, double tol,
                                     Damping damping = Damping::none);
QuadratureResult integrate_half_line(const Integrand& f, double tol, const HalfLineOptions& opts);

/// int_{-inf}^{inf} f(t) dt via t = u/(1 - u^2) on (-1, 1).
QuadratureResult integrate_real_line(const Integrand& f, double tol);

/// int_0^inf h(x) e^{i beta x^2} dx via Gaussian damping e^{-eps x^2} on the
/// ladder and extrapolation to eps = 0.
QuadratureResult integrate_oscillatory_gaussian(const Integrand& h, double beta, double tol,
                                                const LadderOptions& ladder = {});

/// Neville extrapolation of (eps_i, values_i) to eps = 0.
RegularizationTrace extrapolate_to_zero(std::span<const double> epsilons,
                                        std::span<const complex> values);

// Series ----------------------------------------------------------------------------

/// Guarded summation with the library-wide stopping rule.
SeriesSum<complex> series_sum(const std::function<complex(int)>& term, double tol = 1e-16,
                              int cap = 10'000);

}  // namespace umbra::oracle
