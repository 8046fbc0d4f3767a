#pragma once

// Special-function kernel. Everything here is computed from its defining
// power series (or a finite sum) to a requested tolerance; there are no
// asymptotic expansions, so arguments are expected to stay at desk scale
// (|x| up to a few tens).

#include <complex>
#include <span>
#include <vector>

#include "umbra/error.hpp"
#include "umbra/series.hpp"

namespace umbra::specfun {

// Gamma machinery ----------------------------------------------------------

/// True when z is 0, -1, -2, ... (exactly).
bool is_gamma_pole(complex z) noexcept;
bool is_gamma_pole(double x) noexcept;

/// Euler Gamma on the principal branch. Lanczos (g = 7, n = 9) for
/// Re z >= 1/2, reflection below. Throws PoleError at 0, -1, -2, ...
complex gamma(complex z);
double gamma(double x);

/// 1/Gamma, entire: exact 0 at the poles of Gamma.
complex rgamma(complex z);
double rgamma(double x);

/// log Gamma up to an additive multiple of 2*pi*i. Only exp() of sums of
/// these is meaningful, which is all the Gamma-ratio code needs.
complex lgamma_mod2pi(complex z);

/// Gamma(a)/Gamma(b) including the removable cases: if both arguments are
/// poles the limit (-1)^(m-n) n!/m! is returned (a = -m, b = -n); a pole in
/// b alone gives 0; a pole in a alone throws PoleError.
complex gamma_ratio(complex a, complex b);

/// B(a, b) = Gamma(a)Gamma(b)/Gamma(a+b), via log-Gamma.
complex beta(complex a, complex b);

/// Rising factorial (a)_k as Gamma(a+k)/Gamma(a) in log space.
complex pochhammer(complex a, int k);

/// sin(pi x), cos(pi x) with exact zeros at the integers / half-integers.
double sinpi(double x);
double cospi(double x);
complex sinpi(complex z);

// Bessel / Struve ------------------------------------------------------------

/// J_nu(x). nu >= 0, or nu a negative integer (J_{-n} = (-1)^n J_n).
/// Non-integer nu needs x >= 0.
double bessel_j(double nu, double x, const SeriesControl& ctl = kDefaultSeries,
                SeriesTail* tail = nullptr);

/// Modified Bessel I_mu for any real order.
double bessel_i(double mu, double x, const SeriesControl& ctl = kDefaultSeries,
                SeriesTail* tail = nullptr);
/// Complex argument, principal branch of (z/2)^mu.
complex bessel_i(double mu, complex z, const SeriesControl& ctl = kDefaultSeries,
                 SeriesTail* tail = nullptr);

/// Struve H_nu(x). Terms whose denominator Gamma sits on a pole are 0.
double struve_h(double nu, double x, const SeriesControl& ctl = kDefaultSeries,
                SeriesTail* tail = nullptr);

// b_nu ---------------------------------------------------------------------

enum class BnuMethod { series, bessel_closed_form };

/// b_nu(x) = sum_k Gamma(nu+k+1)/Gamma(2nu+k+1) x^k/k!, or its closed form
/// (sqrt(pi)/2) x^(1/2-nu) e^(x/2) [I_{nu-1/2}(x/2) + I_{nu+1/2}(x/2)]
/// on the principal branch (x != 0).
complex b_nu(double nu, complex x, BnuMethod method = BnuMethod::series,
             const SeriesControl& ctl = kDefaultSeries, SeriesTail* tail = nullptr);

// Hermite-type polynomials --------------------------------------------------

/// Higher-order Hermite H_n^(m)(u, v) = n! sum_k u^(n-mk) v^k / ((n-mk)! k!).
complex hermite_higher(int n, int m, complex u, complex v);

/// H_n^(m)(u, v) / n!, computed without forming n!.
complex hermite_higher_scaled(int n, int m, complex u, complex v);

/// Hybrid polynomial sum_k x^(n-mk) y^k / (k! ((n-mk)!)^2).
complex hermite_hybrid(int n, int m, complex x, complex y);

/// Truncated polynomial e_n^(m)(x, y) = sum_k x^(n-mk) y^k / ((n-mk)!)^2.
complex truncated_e(int n, int m, complex x, complex y);

/// Pseudo-trigonometric c_k^(m)(x) = sum_r (-1)^r x^(mr+k)/(mr+k)!.
double pseudo_trig(int k, int m, double x, const SeriesControl& ctl = kDefaultSeries,
                   SeriesTail* tail = nullptr);

/// Hermite-based Tricomi function sum_k (-1)^k H_k^(m)(x,y) / (k! (n+k)!).
complex hermite_tricomi(int n, int m, complex x, complex y,
                        const SeriesControl& ctl = kDefaultSeries,
                        SeriesTail* tail = nullptr);

// Hypergeometric -------------------------------------------------------------

/// Generalized hypergeometric pFq(a; b; y), p <= q + 1.
complex hyper_pfq(std::span<const complex> a, std::span<const complex> b, complex y,
                  const SeriesControl& ctl = kDefaultSeries, SeriesTail* tail = nullptr);

inline complex hyper_pfq(std::initializer_list<complex> a, std::initializer_list<complex> b,
                         complex y, const SeriesControl& ctl = kDefaultSeries) {
  return hyper_pfq(std::span<const complex>(a.begin(), a.size()),
                   std::span<const complex>(b.begin(), b.size()), y, ctl);
}

}  // namespace umbra::specfun
