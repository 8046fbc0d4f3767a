#include <algorithm>
#include <cmath>
#include <numbers>

#include "umbra/oracle.hpp"

namespace umbra::oracle {

namespace {

void check_ladder(const std::vector<double>& eps) {
  if (eps.size() < 2) throw DomainError("epsilon ladder needs at least two rungs");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0)) throw DomainError("epsilon ladder: rungs must be positive");
    if (i > 0 && !(eps[i] < eps[i - 1])) throw DomainError("epsilon ladder: must strictly decrease");
  }
}

QuadratureOptions panel_options(double rung_tol, std::size_t panels) {
  QuadratureOptions o;
  o.abs_tol = std::max(rung_tol / double(std::max<std::size_t>(panels, 1)), 1e-15);
  o.rel_tol = 1e-12;
  o.max_intervals = 400;
  // A panel far out on the ladder can cancel down to rounding; the ladder
  // folds every panel estimate into its own error bound anyway.
  o.floor_converges = true;
  return o;
}

// Runs every rung, extrapolates, and folds everything into one result.
template <class RungFn>
QuadratureResult run_ladder(const LadderOptions& ladder, double tol, RungFn&& rung) {
  check_ladder(ladder.epsilons);
  std::vector<double> eps = ladder.epsilons;
  std::vector<complex> values;
  QuadratureResult out;
  out.converged = true;
  double quad_err = 0.0;
  auto add_rung = [&](double e) {
    const QuadratureResult r = rung(e);
    values.push_back(r.value);
    out.evaluations += r.evaluations;
    out.intervals += r.intervals;
    quad_err = std::max(quad_err, r.abs_error_estimate);
    if (!r.converged) {
      out.converged = false;
      out.note = "a damped rung did not converge";
    }
  };
  for (double e : eps) add_rung(e);
  RegularizationTrace trace = extrapolate_to_zero(eps, values);
  for (int extra = 0; extra < ladder.max_extra_rungs && trace.residual + quad_err > tol; ++extra) {
    eps.push_back(0.5 * eps.back());
    add_rung(eps.back());
    trace = extrapolate_to_zero(eps, values);
  }
  out.value = trace.extrapolated;
  out.abs_error_estimate = trace.residual + quad_err;
  const auto& res = trace.residuals;
  if (res.size() >= 2 && res.back() > res[res.size() - 2] && res.back() > tol) {
    out.converged = false;
    out.note = "extrapolation diverging";
  }
  if (out.converged && out.abs_error_estimate > tol) {
    out.converged = false;
    out.note = "extrapolation residual above tolerance";
  }
  out.trace = std::move(trace);
  return out;
}

}  // namespace

RegularizationTrace extrapolate_to_zero(std::span<const double> epsilons,
                                        std::span<const complex> values) {
  if (epsilons.size() != values.size() || epsilons.empty())
    throw DomainError("extrapolate_to_zero: mismatched or empty ladder");
  RegularizationTrace t;
  t.epsilons.assign(epsilons.begin(), epsilons.end());
  t.values.assign(values.begin(), values.end());
  const std::size_t n = values.size();
  // Neville tableau at 0; column p after step j holds P_{j-p..j}(0).
  std::vector<complex> p(values.begin(), values.end());
  t.estimates.push_back(p[0]);
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = j; i-- > 0;) {
      // Update in place from the bottom: p[i] becomes P_{i..j}(0).
      const double ei = epsilons[i];
      const double ej = epsilons[j];
      p[i] = (ej * p[i] - ei * p[i + 1]) / (ej - ei);
    }
    t.estimates.push_back(p[0]);
    t.residuals.push_back(std::abs(t.estimates[j] - t.estimates[j - 1]));
  }
  t.extrapolated = t.estimates.back();
  t.residual = t.residuals.empty() ? 0.0 : t.residuals.back();
  return t;
}

QuadratureResult integrate_half_line(const Integrand& f, double tol, Damping damping) {
  HalfLineOptions o;
  o.damping = damping;
  return integrate_half_line(f, tol, o);
}

QuadratureResult integrate_half_line(const Integrand& f, double tol, const HalfLineOptions& opts) {
  const double lower = opts.lower;
  if (opts.damping == Damping::none) {
    const auto qo = QuadratureOptions::from_tol(0.5 * tol);
    QuadratureResult head = integrate_finite(f, lower, lower + 1.0, qo);
    const Integrand mapped = [&f, lower](double v) -> complex {
      const double w = 1.0 - v;
      if (w <= 0.0) return 0.0;
      const double s = v / w;
      const double es = std::exp(s);
      const double jac = es / (w * w);
      if (!std::isfinite(jac)) return 0.0;
      return f(lower + es) * jac;
    };
    QuadratureResult tail = integrate_finite(mapped, 0.0, 1.0, qo);
    QuadratureResult out;
    out.value = head.value + tail.value;
    out.abs_error_estimate = head.abs_error_estimate + tail.abs_error_estimate;
    out.evaluations = head.evaluations + tail.evaluations;
    out.intervals = head.intervals + tail.intervals;
    out.converged = head.converged && tail.converged;
    if (!out.converged) out.note = head.converged ? tail.note : head.note;
    return out;
  }

  const auto& lad = opts.ladder;
  if (!(lad.period > 0.0)) throw DomainError("integrate_half_line: panel period must be positive");
  return run_ladder(lad, tol, [&](double eps) {
    const double length = std::log(1.0 / (lad.rung_tol * eps)) / eps;
    const auto panels = static_cast<std::size_t>(std::ceil(length / lad.period));
    std::vector<double> edges(panels + 1);
    for (std::size_t i = 0; i <= panels; ++i) edges[i] = lower + lad.period * double(i);
    const Integrand damped = [&f, eps, lower](double x) {
      return f(x) * std::exp(-eps * (x - lower));
    };
    return integrate_panels(damped, edges, panel_options(lad.rung_tol, panels), lad.exec);
  });
}

QuadratureResult integrate_real_line(const Integrand& f, double tol) {
  const Integrand mapped = [&f](double u) -> complex {
    const double w = 1.0 - u * u;
    if (w <= 0.0) return 0.0;
    const double jac = (1.0 + u * u) / (w * w);
    const double t = u / w;
    if (!std::isfinite(jac) || !std::isfinite(t)) return 0.0;
    return f(t) * jac;
  };
  return integrate_finite(mapped, -1.0, 1.0, QuadratureOptions::from_tol(tol));
}

QuadratureResult integrate_oscillatory_gaussian(const Integrand& h, double beta, double tol,
                                                const LadderOptions& ladder) {
  if (!(beta > 0.0)) throw DomainError("integrate_oscillatory_gaussian: beta must be positive");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  return run_ladder(ladder, tol, [&](double eps) {
    const double length = std::sqrt(std::log(1.0 / (ladder.rung_tol * eps)) / eps);
    // One panel per period of the chirp e^{i beta x^2}.
    const auto panels = static_cast<std::size_t>(std::ceil(beta * length * length / kTwoPi));
    std::vector<double> edges(panels + 1);
    for (std::size_t j = 0; j <= panels; ++j) edges[j] = std::sqrt(kTwoPi * double(j) / beta);
    const complex phase(-eps, beta);
    const Integrand damped = [&h, phase](double x) { return h(x) * std::exp(phase * (x * x)); };
    return integrate_panels(damped, edges, panel_options(ladder.rung_tol, panels), ladder.exec);
  });
}

}  // namespace umbra::oracle
