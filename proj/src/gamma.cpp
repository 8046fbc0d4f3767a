#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "umbra/specfun.hpp"

namespace umbra::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

complex lanczos_sum(complex zm1) {
  complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (zm1 + double(i));
  return x;
}

[[noreturn]] void throw_pole(complex z) {
  std::ostringstream os;
  os << "Gamma pole at z = " << z.real();
  throw PoleError(os.str(), z);
}

// Above this modulus the direct product Gamma(a)/Gamma(b) risks overflow and
// the log route is used instead.
constexpr double kDirectLimit = 30.0;

}  // namespace

bool is_gamma_pole(double x) noexcept { return x <= 0.0 && x == std::floor(x); }

bool is_gamma_pole(complex z) noexcept { return z.imag() == 0.0 && is_gamma_pole(z.real()); }

double sinpi(double x) {
  const double n = std::round(2.0 * x);
  const double r = x - 0.5 * n;
  const long q = static_cast<long>(std::fmod(n, 4.0) + 4.0) % 4;
  switch (q) {
    case 0: return std::sin(kPi * r);
    case 1: return std::cos(kPi * r);
    case 2: return -std::sin(kPi * r);
    default: return -std::cos(kPi * r);
  }
}

double cospi(double x) {
  const double n = std::round(2.0 * x);
  const double r = x - 0.5 * n;
  const long q = static_cast<long>(std::fmod(n, 4.0) + 4.0) % 4;
  switch (q) {
    case 0: return std::cos(kPi * r);
    case 1: return -std::sin(kPi * r);
    case 2: return -std::cos(kPi * r);
    default: return std::sin(kPi * r);
  }
}

complex sinpi(complex z) {
  const double y = kPi * z.imag();
  return {sinpi(z.real()) * std::cosh(y), cospi(z.real()) * std::sinh(y)};
}

complex gamma(complex z) {
  if (is_gamma_pole(z)) throw_pole(z);
  if (z.real() < 0.5) return kPi / (sinpi(z) * gamma(1.0 - z));
  const complex zm1 = z - 1.0;
  const complex t = zm1 + kLanczosG + 0.5;
  return std::sqrt(2.0 * kPi) * std::exp((zm1 + 0.5) * std::log(t) - t) * lanczos_sum(zm1);
}

double gamma(double x) {
  if (is_gamma_pole(x)) throw_pole(x);
  if (x < 0.5) return kPi / (sinpi(x) * gamma(1.0 - x));
  const double xm1 = x - 1.0;
  const double t = xm1 + kLanczosG + 0.5;
  // Split the power so t^(x-1/2) does not overflow before e^-t pulls it back.
  const double half = std::pow(t, 0.5 * (xm1 + 0.5));
  return std::sqrt(2.0 * kPi) * half * (half * std::exp(-t)) * lanczos_sum(xm1).real();
}

complex rgamma(complex z) {
  if (is_gamma_pole(z)) return 0.0;
  if (z.real() < 0.5) return sinpi(z) * gamma(1.0 - z) / kPi;
  return 1.0 / gamma(z);
}

double rgamma(double x) {
  if (is_gamma_pole(x)) return 0.0;
  if (x < 0.5) return sinpi(x) * gamma(1.0 - x) / kPi;
  return 1.0 / gamma(x);
}

complex lgamma_mod2pi(complex z) {
  if (is_gamma_pole(z)) throw_pole(z);
  if (z.real() < 0.5) return std::log(kPi) - std::log(sinpi(z)) - lgamma_mod2pi(1.0 - z);
  const complex zm1 = z - 1.0;
  const complex t = zm1 + kLanczosG + 0.5;
  return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(lanczos_sum(zm1));
}

complex gamma_ratio(complex a, complex b) {
  const bool pa = is_gamma_pole(a);
  const bool pb = is_gamma_pole(b);
  if (pa && pb) {
    // Gamma(-m + d)/Gamma(-n + d) -> (-1)^(m-n) n!/m! as d -> 0.
    const double m = -a.real();
    const double n = -b.real();
    const double sign = std::fmod(std::abs(m - n), 2.0) == 0.0 ? 1.0 : -1.0;
    return sign * std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0));
  }
  if (pb) return 0.0;
  if (pa) throw_pole(a);
  if (std::abs(a) < kDirectLimit && std::abs(b) < kDirectLimit) return gamma(a) * rgamma(b);
  return std::exp(lgamma_mod2pi(a) - lgamma_mod2pi(b));
}

complex beta(complex a, complex b) {
  if (is_gamma_pole(a)) throw_pole(a);
  if (is_gamma_pole(b)) throw_pole(b);
  const complex s = a + b;
  if (is_gamma_pole(s)) return 0.0;
  if (std::abs(a) < kDirectLimit && std::abs(b) < kDirectLimit && std::abs(s) < kDirectLimit)
    return gamma(a) * gamma(b) * rgamma(s);
  return std::exp(lgamma_mod2pi(a) + lgamma_mod2pi(b) - lgamma_mod2pi(s));
}

complex pochhammer(complex a, int k) {
  if (k < 0) throw DomainError("pochhammer: negative k");
  if (k <= 64) {
    complex p = 1.0;
    for (int j = 0; j < k; ++j) p *= a + double(j);
    return p;
  }
  return gamma_ratio(a + double(k), a);
}

}  // namespace umbra::specfun
