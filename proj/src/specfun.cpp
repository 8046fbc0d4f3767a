#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "umbra/specfun.hpp"

namespace umbra {

namespace detail {
void throw_series_cap(const std::string& what, const SeriesTail& tail, complex partial) {
  std::ostringstream os;
  os << what << ": no convergence after " << tail.terms_used
     << " terms (last |term| = " << tail.last_term_magnitude << ")";
  throw ConvergenceError(os.str(), tail, partial);
}
}  // namespace detail

namespace specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double x) { return x == std::floor(x); }
bool is_odd(double n) { return std::fmod(std::abs(n), 2.0) == 1.0; }

// 1/n! from a table while it fits a double, then from log-Gamma.
double inv_factorial(int n) {
  static const auto table = [] {
    std::array<double, 171> t{};
    double f = 1.0;
    t[0] = 1.0;
    for (int i = 1; i < 171; ++i) {
      f *= i;
      t[i] = 1.0 / f;
    }
    return t;
  }();
  if (n < 0) return 0.0;
  if (n < 171) return table[n];
  return std::exp(-std::lgamma(n + 1.0));
}

complex ipow(complex z, int n) {
  complex r = 1.0;
  complex b = z;
  for (unsigned e = static_cast<unsigned>(n); e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    b *= b;
  }
  return r;
}

void store(SeriesTail* out, const SeriesTail& t) {
  if (out != nullptr) *out = t;
}

void check_hermite_args(int n, int m, const char* who) {
  if (n < 0) throw DomainError(std::string(who) + ": n must be >= 0");
  if (m < 2) throw DomainError(std::string(who) + ": m must be >= 2");
}

// lead * sum_k q^k Gamma(mu + 1) / (k! Gamma(k + mu + 1)); `lead` already
// carries the 1/Gamma(mu + 1).
template <class T>
SeriesSum<T> bessel_like(double mu, T lead, T q, const SeriesControl& ctl, const char* what) {
  T t = lead;
  return sum_series<T>(
      [&](int k) {
        if (k > 0) t *= q / (double(k) * (double(k) + mu));
        return t;
      },
      ctl, what);
}

}  // namespace

// Bessel ---------------------------------------------------------------------

double bessel_j(double nu, double x, const SeriesControl& ctl, SeriesTail* tail) {
  if (nu < 0.0 && is_integer(nu)) {
    const double v = bessel_j(-nu, x, ctl, tail);
    return is_odd(nu) ? -v : v;
  }
  if (x < 0.0) {
    if (!is_integer(nu)) throw DomainError("bessel_j: negative argument needs integer order");
    const double v = bessel_j(nu, -x, ctl, tail);
    return is_odd(nu) ? -v : v;
  }
  if (x == 0.0) {
    store(tail, {1, 0.0, true});
    if (nu == 0.0) return 1.0;
    if (nu > 0.0) return 0.0;
    throw DomainError("bessel_j: J_nu(0) is infinite for negative non-integer nu");
  }
  const double half = 0.5 * x;
  // Large orders build the lead term in log space to dodge Gamma overflow.
  const double lead = nu > 100.0 ? std::exp(nu * std::log(half) - std::lgamma(nu + 1.0))
                                 : std::pow(half, nu) * rgamma(nu + 1.0);
  const auto s = bessel_like<double>(nu, lead, -half * half, ctl, "bessel_j");
  store(tail, s.tail);
  return s.value;
}

double bessel_i(double mu, double x, const SeriesControl& ctl, SeriesTail* tail) {
  if (mu < 0.0 && is_integer(mu)) return bessel_i(-mu, x, ctl, tail);
  if (x < 0.0) {
    if (!is_integer(mu)) throw DomainError("bessel_i: negative argument needs integer order");
    const double v = bessel_i(mu, -x, ctl, tail);
    return is_odd(mu) ? -v : v;
  }
  if (x == 0.0) {
    store(tail, {1, 0.0, true});
    if (mu == 0.0) return 1.0;
    if (mu > 0.0) return 0.0;
    throw DomainError("bessel_i: I_mu(0) is infinite for negative non-integer mu");
  }
  const double half = 0.5 * x;
  const auto s = bessel_like<double>(mu, std::pow(half, mu) * rgamma(mu + 1.0), half * half, ctl, "bessel_i");
  store(tail, s.tail);
  return s.value;
}

complex bessel_i(double mu, complex z, const SeriesControl& ctl, SeriesTail* tail) {
  if (mu < 0.0 && is_integer(mu)) return bessel_i(-mu, z, ctl, tail);
  if (z == 0.0) {
    store(tail, {1, 0.0, true});
    if (mu == 0.0) return 1.0;
    if (mu > 0.0) return 0.0;
    throw DomainError("bessel_i: I_mu(0) is infinite for negative non-integer mu");
  }
  const complex half = 0.5 * z;
  const complex lead = is_integer(mu) ? ipow(half, static_cast<int>(mu)) : std::pow(half, mu);
  const auto s = bessel_like<complex>(mu, lead * rgamma(mu + 1.0), half * half, ctl, "bessel_i");
  store(tail, s.tail);
  return s.value;
}

double struve_h(double nu, double x, const SeriesControl& ctl, SeriesTail* tail) {
  const double power = nu + 1.0;
  double lead;
  if (x == 0.0) {
    if (power > 0.0) {
      store(tail, {1, 0.0, true});
      return 0.0;
    }
    if (power < 0.0) throw DomainError("struve_h: singular at x = 0 for nu < -1");
    lead = 1.0;
  } else if (x < 0.0) {
    if (!is_integer(power)) throw DomainError("struve_h: negative argument needs integer nu");
    lead = std::pow(0.5 * x, power);
  } else {
    lead = std::pow(0.5 * x, power);
  }

  const double q = -0.25 * x * x;
  // Terms with k + nu + 3/2 a non-positive integer vanish; start the
  // recurrence at the first surviving term.
  int first = 0;
  if (is_gamma_pole(nu + 1.5)) first = static_cast<int>(-(nu + 1.5)) + 1;

  double t = 0.0;
  SeriesControl c = ctl;
  c.min_terms = std::max(ctl.min_terms, first + 1);
  const auto s = sum_series<double>(
      [&](int k) {
        if (k < first) return 0.0;
        if (k == first) {
          t = lead * std::pow(q, first) * rgamma(first + 1.5) * rgamma(first + nu + 1.5);
        } else {
          t *= q / ((k + 0.5) * (k + nu + 0.5));
        }
        return t;
      },
      c, "struve_h");
  store(tail, s.tail);
  return s.value;
}

// b_nu -----------------------------------------------------------------------

complex b_nu(double nu, complex x, BnuMethod method, const SeriesControl& ctl,
             SeriesTail* tail) {
  if (method == BnuMethod::bessel_closed_form) {
    if (x == 0.0) throw DomainError("b_nu: closed form is undefined at x = 0");
    const complex half = 0.5 * x;
    SeriesTail t1, t2;
    const complex i_lo = bessel_i(nu - 0.5, half, ctl, &t1);
    const complex i_hi = bessel_i(nu + 0.5, half, ctl, &t2);
    store(tail, t1.terms_used >= t2.terms_used ? t1 : t2);
    return 0.5 * std::sqrt(kPi) * std::pow(x, 0.5 - nu) * std::exp(half) * (i_lo + i_hi);
  }

  // Gamma(nu+k+1)/Gamma(2nu+k+1) by recurrence, recomputed directly around
  // poles (where the ratio is a limit or zero).
  complex ratio = 0.0;
  bool regular_prev = false;
  complex power = 1.0;  // x^k / k!
  const auto s = sum_series<complex>(
      [&](int k) {
        const double a = nu + k + 1.0;
        const double b = 2.0 * nu + k + 1.0;
        const bool regular = !is_gamma_pole(a) && !is_gamma_pole(b);
        if (regular && regular_prev) {
          ratio *= (a - 1.0) / (b - 1.0);
        } else {
          ratio = gamma_ratio(a, b);
        }
        regular_prev = regular;
        if (k > 0) power *= x / double(k);
        return ratio * power;
      },
      ctl, "b_nu");
  store(tail, s.tail);
  return s.value;
}

// Hermite-type polynomials ----------------------------------------------------

complex hermite_higher_scaled(int n, int m, complex u, complex v) {
  check_hermite_args(n, m, "hermite_higher");
  complex sum = 0.0;
  for (int k = 0; k <= n / m; ++k) {
    const int r = n - m * k;
    sum += ipow(u, r) * ipow(v, k) * (inv_factorial(r) * inv_factorial(k));
  }
  return sum;
}

complex hermite_higher(int n, int m, complex u, complex v) {
  return hermite_higher_scaled(n, m, u, v) / inv_factorial(n);
}

complex hermite_hybrid(int n, int m, complex x, complex y) {
  check_hermite_args(n, m, "hermite_hybrid");
  complex sum = 0.0;
  for (int k = 0; k <= n / m; ++k) {
    const int r = n - m * k;
    const double ir = inv_factorial(r);
    sum += ipow(x, r) * ipow(y, k) * (inv_factorial(k) * ir * ir);
  }
  return sum;
}

complex truncated_e(int n, int m, complex x, complex y) {
  check_hermite_args(n, m, "truncated_e");
  complex sum = 0.0;
  for (int k = 0; k <= n / m; ++k) {
    const int r = n - m * k;
    const double ir = inv_factorial(r);
    sum += ipow(x, r) * ipow(y, k) * (ir * ir);
  }
  return sum;
}

double pseudo_trig(int k, int m, double x, const SeriesControl& ctl, SeriesTail* tail) {
  if (m < 2) throw DomainError("pseudo_trig: m must be >= 2");
  if (k < 0 || k >= m) throw DomainError("pseudo_trig: need 0 <= k < m");
  const double xm = std::pow(x, m);
  double t = std::pow(x, k) * inv_factorial(k);
  const auto s = sum_series<double>(
      [&](int r) {
        if (r > 0) {
          double denom = 1.0;
          for (int j = 1; j <= m; ++j) denom *= double(m * (r - 1) + k + j);
          t *= -xm / denom;
        }
        return t;
      },
      ctl, "pseudo_trig");
  store(tail, s.tail);
  return s.value;
}

complex hermite_tricomi(int n, int m, complex x, complex y, const SeriesControl& ctl,
                        SeriesTail* tail) {
  check_hermite_args(n, m, "hermite_tricomi");
  // H_k^(m) grows factorially before 1/(k!(n+k)!) wins; the stopping rule
  // only arms once successive terms shrink by a factor below 0.9.
  constexpr double kArmRatio = 0.9;
  complex sum = 0.0;
  double prev = -1.0;
  bool armed = false;
  int quiet = 0;
  double last = 0.0;
  for (int k = 0; k < ctl.cap; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const complex term = sign * hermite_higher_scaled(k, m, x, y) * inv_factorial(n + k);
    sum += term;
    last = std::abs(term);
    if (prev > 0.0 && last < kArmRatio * prev) armed = true;
    if (prev == 0.0 && last == 0.0) armed = true;
    prev = last;
    const double bound = std::max(ctl.rel_tol * std::abs(sum), ctl.abs_tol);
    quiet = (armed && last <= bound) ? quiet + 1 : 0;
    if (k + 1 >= ctl.min_terms && quiet >= ctl.quiet_terms) {
      store(tail, {k + 1, last, true});
      return sum;
    }
  }
  detail::throw_series_cap("hermite_tricomi", {ctl.cap, last, false}, sum);
}

// Hypergeometric ----------------------------------------------------------------

complex hyper_pfq(std::span<const complex> a, std::span<const complex> b, complex y,
                  const SeriesControl& ctl, SeriesTail* tail) {
  const std::size_t p = a.size();
  const std::size_t q = b.size();
  if (p > q + 1) throw DomainError("hyper_pfq: need p <= q + 1");
  for (std::size_t j = 0; j < q; ++j) {
    if (is_gamma_pole(b[j])) {
      throw PoleError("hyper_pfq: lower parameter at a non-positive integer", b[j],
                      static_cast<int>(j));
    }
  }
  if (p == q + 1 && std::abs(y) >= 1.0) {
    throw DomainError("hyper_pfq: series with p = q + 1 needs |y| < 1");
  }
  // (a)_k/(b)_k advanced one factor at a time.
  complex t = 1.0;
  const auto s = sum_series<complex>(
      [&](int k) {
        if (k > 0) {
          const double km1 = k - 1.0;
          complex r = y / double(k);
          for (const auto& ai : a) r *= ai + km1;
          for (const auto& bj : b) r /= bj + km1;
          t *= r;
        }
        return t;
      },
      ctl, "hyper_pfq");
  store(tail, s.tail);
  return s.value;
}

}  // namespace specfun
}  // namespace umbra
