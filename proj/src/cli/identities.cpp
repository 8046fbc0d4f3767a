// Both sides of every cataloged identity. The closed side calls into
// closedforms / umbral / transforms / specfun; the oracle side may only use
// the quadrature engine, the reference functions and the standard library.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "umbra/cli.hpp"
#include "umbra/reference.hpp"
#include "umbra/specfun.hpp"
#include "umbra/transforms.hpp"
#include "umbra/umbral.hpp"

namespace umbra::cli {

namespace {

// Beyond this e^{-t} underflows; the polynomial factors would overflow first.
constexpr double kLaplaceCut = 745.0;

using oracle::QuadratureResult;

Comparison from(complex closed, const QuadratureResult& r) {
  return {closed, r.value, r.evaluations, r.abs_error_estimate, r.converged, r.note};
}

// Plain series on the oracle side: exact to rounding, no cost to report.
Comparison from_sum(complex closed, const SeriesSum<complex>& s) {
  return {closed, s.value, s.tail.terms_used, s.tail.last_term_magnitude, s.tail.converged, ""};
}

int as_int(const Point& p, const char* k) { return static_cast<int>(p.at(k)); }

// J_n(x) for integer n and any real x.
double jn(int n, double x) {
  const double v = std::cyl_bessel_j(double(n), std::abs(x));
  return (x < 0.0 && n % 2 != 0) ? -v : v;
}

Comparison mellin(const Point& p, bool rational, double tol) {
  const double nu = p.at("nu");
  const auto f = rational ? umbral::UmbralSeries::rational() : umbral::UmbralSeries::exponential();
  const complex closed = umbral::mellin_master(f, nu);
  const oracle::Integrand g = [nu, rational](double x) -> complex {
    const double w = std::pow(x, nu - 1.0);
    return rational ? w / (1.0 + x) : w * std::exp(-x);
  };
  return from(closed, oracle::integrate_half_line(g, tol));
}

Comparison b_nu(const Point& p) {
  const double nu = p.at("nu"), x = p.at("x");
  const complex closed = specfun::b_nu(nu, x, specfun::BnuMethod::series);
  Comparison c;
  c.closed = closed;
  c.oracle = reference::b_nu(nu, x);
  c.oracle_converged = true;
  return c;
}

Comparison fresnel(const Point& p, bool order0, double tol, oracle::Execution exec) {
  const double nu = order0 ? 0.0 : p.at("nu");
  const double alpha = p.at("alpha"), beta = p.at("beta");
  const complex closed = closedforms::fresnel_bessel(nu, alpha, beta);
  const oracle::Integrand h = [nu, alpha](double x) -> complex {
    return x * std::cyl_bessel_j(2.0 * nu, alpha * x);
  };
  oracle::LadderOptions lad;
  lad.exec = exec;
  return from(closed, oracle::integrate_oscillatory_gaussian(h, beta, tol, lad));
}

Comparison generating(const Point& p) {
  const int m = as_int(p, "m");
  const double x = p.at("x"), t = p.at("t");
  const complex closed = closedforms::bessel_generating_function(x, t, m, closedforms::GenMethod::tricomi);
  SeriesControl ctl;
  ctl.min_terms = static_cast<int>(2.0 * std::abs(x) + std::abs(t)) + 3;
  double tn = 1.0;
  const auto s = sum_series<complex>(
      [&](int n) -> complex {
        if (n > 0) tn *= t / n;
        return tn * jn(m * n, 2.0 * x);
      },
      ctl, "generating function (reference)");
  return from_sum(closed, s);
}

Comparison bessel_gauss(const Point& p, double tol) {
  const int n = as_int(p, "n");
  const double x = p.at("x");
  const complex closed = closedforms::bessel_gauss_dilation(n, x);
  const oracle::Integrand g = [n, x](double t) -> complex { return jn(n, x * std::exp(-t * t)); };
  return from(closed, oracle::integrate_real_line(g, tol));
}

closedforms::LorentzMethod lorentz_method(const std::string& v) {
  using M = closedforms::LorentzMethod;
  if (v.empty() || v == "hypergeometric") return M::hypergeometric;
  if (v == "series") return M::series;
  if (v == "multiplier") return M::multiplier;
  if (v == "paper-literal") return M::paper_literal;
  throw UsageError("unknown variant '" + v + "' for eq30_lorentz_gauss");
}

Comparison lorentz(const Point& p, const std::string& variant, double tol) {
  const double x = p.at("x");
  const complex closed = closedforms::lorentz_gauss_integral(x, lorentz_method(variant));
  const oracle::Integrand g = [x](double t) -> complex {
    const double w = 1.0 / (1.0 + t * t);
    return std::exp(-x * x * w * w) * w * w;
  };
  return from(closed, oracle::integrate_real_line(g, tol));
}

Comparison borel_bessel(const Point& p, double tol) {
  const double x = p.at("x");
  // g has moments phi(k) = 1/k!, so its coefficients are phi(k)/(k!)^2.
  const umbral::GammaRatioSequence phi{1.0, {}, {{1.0, 1.0}, {1.0, 1.0}}};
  const auto L = transforms::borel_transform(transforms::CoefficientSeries::from_moments(phi));
  const complex closed = L(x);
  const oracle::Integrand g = [x](double t) -> complex {
    if (t > kLaplaceCut) return 0.0;
    // sum_k (-y)^k/(k!)^3 by term recurrence
    const double y = x * t;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 400; ++k) {
      term *= -y / (double(k) * k * k);
      sum += term;
      if (std::abs(term) < 1e-17 * std::abs(sum) && double(k) * k * k > y) break;
    }
    return std::exp(-t) * sum;
  };
  return from(closed, oracle::integrate_half_line(g, tol));
}

// H~_n^(m)(x, y) straight from its definition.
double hybrid(int n, int m, double x, double y) {
  double s = 0.0;
  for (int k = 0; m * k <= n; ++k) {
    const int j = n - m * k;
    s += std::pow(x, j) * std::pow(y, k) / (std::tgamma(k + 1.0) * std::tgamma(j + 1.0) * std::tgamma(j + 1.0));
  }
  return s;
}

Comparison borel_hybrid(const Point& p, const std::string& variant, double tol) {
  const int n = as_int(p, "n"), m = as_int(p, "m");
  const double x = p.at("x"), y = p.at("y");
  const bool second = variant == "second";
  if (!variant.empty() && variant != "first" && !second)
    throw UsageError("unknown variant '" + variant + "' for eq34_borel_hybrid");
  const complex closed =
      second ? specfun::truncated_e(n, m, x, y) : specfun::hermite_higher_scaled(n, m, x, y);
  const oracle::Integrand g = [=](double t) -> complex {
    if (t > kLaplaceCut) return 0.0;
    return std::exp(-t) * (second ? hybrid(n, m, x, y * t) : hybrid(n, m, x * t, y));
  };
  return from(closed, oracle::integrate_half_line(g, tol));
}

Comparison borel_pseudo_trig(const Point& p, double tol) {
  const int m = as_int(p, "m");
  const double x = p.at("x");
  const complex closed = 1.0 / (1.0 + std::pow(x, m));
  const oracle::Integrand g = [m, x](double t) -> complex {
    if (t > kLaplaceCut) return 0.0;
    return std::exp(-t) * reference::pseudo_trig(0, m, x * t);
  };
  return from(closed, oracle::integrate_half_line(g, tol));
}

Comparison beta_transform(const Point& p, const std::string& variant, double tol) {
  const double alpha = p.at("alpha"), beta = p.at("beta"), x = p.at("x");
  const bool bessel = variant == "bessel";
  if (!variant.empty() && variant != "exp" && !bessel)
    throw UsageError("unknown variant '" + variant + "' for eq38_beta_transform");
  umbral::UmbralSeries f = umbral::UmbralSeries::exponential();
  if (bessel) f.phi = umbral::GammaRatioSequence::inverse_factorial();
  const complex closed = transforms::beta_transform(f, alpha, beta)(x);
  auto fz = [=](double u) {
    const double z = u * x;
    if (!bessel) return std::exp(-z);
    if (z >= 0.0) return std::cyl_bessel_j(0.0, 2.0 * std::sqrt(z));
    return std::cyl_bessel_i(0.0, 2.0 * std::sqrt(-z));
  };
  // Split at 1/2 and flatten the endpoint powers: u = s^{1/alpha} on the left
  // half, 1 - u = s^{1/beta} on the right.
  const oracle::Integrand left = [=](double s) -> complex {
    const double u = std::pow(s, 1.0 / alpha);
    return std::pow(1.0 - u, beta - 1.0) * fz(u) / alpha;
  };
  const oracle::Integrand right = [=](double s) -> complex {
    const double w = std::pow(s, 1.0 / beta);
    return std::pow(1.0 - w, alpha - 1.0) * fz(1.0 - w) / beta;
  };
  const auto a = oracle::integrate_finite(left, 0.0, std::pow(0.5, alpha), 0.5 * tol);
  const auto b = oracle::integrate_finite(right, 0.0, std::pow(0.5, beta), 0.5 * tol);
  QuadratureResult r;
  r.value = a.value + b.value;
  r.abs_error_estimate = a.abs_error_estimate + b.abs_error_estimate;
  r.evaluations = a.evaluations + b.evaluations;
  r.intervals = a.intervals + b.intervals;
  r.converged = a.converged && b.converged;
  r.note = a.converged ? b.note : a.note;
  return from(closed, r);
}

}  // namespace

Comparison evaluate_identity(const IdentityDescriptor& id, const Point& p, const std::string& variant,
                             double tol, oracle::Execution exec) {
  const std::string& k = id.id;
  const bool takes_variant = !id.variants.empty();
  if (!variant.empty() && !takes_variant) throw UsageError(k + " has no variants");
  if (takes_variant && !variant.empty() &&
      std::find(id.variants.begin(), id.variants.end(), variant) == id.variants.end())
    throw UsageError("unknown variant '" + variant + "' for " + k);

  if (k == "eq02_mellin_exp") return mellin(p, false, tol);
  if (k == "eq02_mellin_rational") return mellin(p, true, tol);
  if (k == "eq07_b_nu") return b_nu(p);
  if (k == "eq07_fresnel_bessel") return fresnel(p, false, tol, exec);
  if (k == "eq08_fresnel_bessel") return fresnel(p, true, tol, exec);
  if (k == "eq12_struve_halfline") {
    const double nu = p.at("nu"), b = p.at("b");
    return from(closedforms::struve_halfline_integral(nu, b),
                reference::struve_halfline(nu, b, 0.0, tol, exec));
  }
  if (k == "eq13_struve_moment") {
    const double nu = p.at("nu");
    auto r = reference::struve_halfline(nu, 1.0, nu + 1.0, 0.5 * tol, exec);
    r.value *= 2.0;
    r.abs_error_estimate *= 2.0;
    return from(closedforms::struve_moment_integral(nu), r);
  }
  if (k == "eq19_generating_function") return generating(p);
  if (k == "eq28_bessel_gauss") return bessel_gauss(p, tol);
  if (k == "eq30_lorentz_gauss") return lorentz(p, variant, tol);
  if (k == "eq33_borel_bessel") return borel_bessel(p, tol);
  if (k == "eq34_borel_hybrid") return borel_hybrid(p, variant, tol);
  if (k == "eq35_borel_pseudo_trig") return borel_pseudo_trig(p, tol);
  if (k == "eq38_beta_transform") return beta_transform(p, variant, tol);
  throw UsageError("no evaluator for identity '" + k + "'");
}

}  // namespace umbra::cli
