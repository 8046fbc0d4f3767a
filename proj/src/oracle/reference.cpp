#include "umbra/reference.hpp"

#include <cmath>
#include <numbers>

namespace umbra::reference {

namespace {

constexpr double kPi = std::numbers::pi;

bool nonpositive_integer(double x) { return x <= 0.0 && x == std::floor(x); }

// sin(pi x), cos(pi x) with exact values on the half-integer lattice.
double sin_pi(double x) {
  const double r = x - 2.0 * std::floor(0.5 * x);
  if (r == 0.0 || r == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == 1.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

double struve_series(double nu, double x) {
  const double h = 0.5 * x;
  double sum = 0.0;
  for (int k = 0; k < 200; ++k) {
    const double b1 = k + 1.5;
    const double b2 = k + nu + 1.5;
    if (nonpositive_integer(b2)) continue;
    const double term = std::pow(h, 2.0 * k + nu + 1.0) / (std::tgamma(b1) * std::tgamma(b2));
    sum += (k % 2 == 0) ? term : -term;
    if (k > 4 && std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// int_0^inf e^{-s} (1 + s^2/x^2)^{nu - 1/2} ds; the integrand is negligible
// past s = 60 for the x >= 1 this is used at.
double k_integral(double nu, double x) {
  const oracle::Integrand g = [nu, x](double s) -> complex {
    return std::exp(-s) * std::pow(1.0 + (s / x) * (s / x), nu - 0.5);
  };
  oracle::QuadratureOptions o;
  o.abs_tol = 1e-16;
  o.rel_tol = 1e-14;
  o.max_intervals = 200;
  return oracle::integrate_finite(g, 0.0, 60.0, o).value.real();
}

// K_nu(x) ~ (1/pi) sum_k Gamma(k+1/2) (x/2)^{nu-2k-1} / Gamma(nu+1/2-k), summed
// up to the smallest term. At x >= 40 that term is below 1e-17 relative.
double struve_k_asymptotic(double nu, double x) {
  const double h = 0.5 * x;
  double sum = 0.0, prev = INFINITY;
  for (int k = 0; k < 200; ++k) {
    const double g = nu + 0.5 - k;
    if (nonpositive_integer(g)) continue;
    const double term = std::tgamma(k + 0.5) * std::pow(h, nu - 2.0 * k - 1.0) / std::tgamma(g);
    if (std::abs(term) > prev) break;
    sum += term;
    prev = std::abs(term);
    if (prev <= 1e-17 * std::abs(sum)) break;
  }
  return sum / kPi;
}

constexpr double kAsymptoticLimit = 40.0;

}  // namespace

double bessel_y(double nu, double x) {
  if (nu >= 0.0) return std::cyl_neumann(nu, x);
  const double mu = -nu;
  return sin_pi(mu) * std::cyl_bessel_j(mu, x) + cos_pi(mu) * std::cyl_neumann(mu, x);
}

double struve_k(double nu, double x) {
  if (x >= kAsymptoticLimit) return struve_k_asymptotic(nu, x);
  if (nu > -0.5) {
    const double lead = 2.0 * std::pow(0.5 * x, nu) / (std::sqrt(kPi) * std::tgamma(nu + 0.5));
    return lead / x * k_integral(nu, x);
  }
  // H_{-(n+1/2)} is a Bessel J up to sign, so K vanishes there.
  if (nu + 0.5 == std::floor(nu + 0.5)) return 0.0;
  const double inhom = nonpositive_integer(nu + 2.5)
                           ? 0.0
                           : std::pow(0.5 * x, nu + 1.0) / (std::sqrt(kPi) * std::tgamma(nu + 2.5));
  return 2.0 * (nu + 1.0) / x * struve_k(nu + 1.0, x) - struve_k(nu + 2.0, x) + inhom;
}

double struve_h(double nu, double x) {
  if (x <= kStruveSeriesLimit) return struve_series(nu, x);
  return bessel_y(nu, x) + struve_k(nu, x);
}

double bessel_i(double mu, double x) {
  if (mu >= 0.0) return std::cyl_bessel_i(mu, x);
  const double a = -mu;
  // I_{-a} = I_a + (2/pi) sin(a pi) K_a
  return std::cyl_bessel_i(a, x) + 2.0 / kPi * sin_pi(a) * std::cyl_bessel_k(a, x);
}

double b_nu(double nu, double x) {
  const double y = std::abs(x);
  const double sign = x > 0.0 ? 1.0 : -1.0;
  const double lead = 0.5 * std::sqrt(kPi) * std::pow(y, 0.5 - nu) * std::exp(0.5 * x);
  return lead * (bessel_i(nu - 0.5, 0.5 * y) + sign * bessel_i(nu + 0.5, 0.5 * y));
}

double pseudo_trig(int k, int m, double x) {
  complex sum = 0.0;
  for (int j = 0; j < m; ++j) {
    const complex w = std::polar(1.0, kPi * (2.0 * j + 1.0) / m);
    sum += std::pow(w, -k) * std::exp(w * x);
  }
  return sum.real() / m;
}

oracle::QuadratureResult struve_halfline(double nu, double b, double mu, double tol,
                                         oracle::Execution exec) {
  // y = b x: int_0^inf x^{-mu} H(bx) dx = b^{mu-1} int_0^inf y^{-mu} H(y) dy.
  const double X = kStruveSeriesLimit;
  const double scale = std::pow(b, mu - 1.0);
  const double part_tol = tol / (3.0 * scale);

  const oracle::Integrand head = [nu, mu](double y) -> complex {
    return std::pow(y, -mu) * struve_series(nu, y);
  };
  const oracle::Integrand ytail = [nu, mu](double y) -> complex {
    return std::pow(y, -mu) * bessel_y(nu, y);
  };
  const oracle::Integrand ktail = [nu, mu](double y) -> complex {
    return std::pow(y, -mu) * struve_k(nu, y);
  };

  auto r0 = oracle::integrate_finite(head, 0.0, X, part_tol);

  oracle::HalfLineOptions yo;
  yo.lower = X;
  yo.damping = oracle::Damping::exp_extrapolated;
  yo.ladder.exec = exec;
  auto r1 = oracle::integrate_half_line(ytail, part_tol, yo);

  oracle::HalfLineOptions ko;
  ko.lower = X;
  auto r2 = oracle::integrate_half_line(ktail, part_tol, ko);

  oracle::QuadratureResult out;
  out.value = scale * (r0.value + r1.value + r2.value);
  out.abs_error_estimate =
      scale * (r0.abs_error_estimate + r1.abs_error_estimate + r2.abs_error_estimate);
  out.evaluations = r0.evaluations + r1.evaluations + r2.evaluations;
  out.intervals = r0.intervals + r1.intervals + r2.intervals;
  out.converged = r0.converged && r1.converged && r2.converged;
  if (!r0.converged) out.note = "head: " + r0.note;
  else if (!r1.converged) out.note = "oscillatory tail: " + r1.note;
  else if (!r2.converged) out.note = "smooth tail: " + r2.note;
  out.trace = r1.trace;
  return out;
}

}  // namespace umbra::reference
