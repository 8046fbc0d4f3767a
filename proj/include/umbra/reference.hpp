#pragma once

// Reference evaluations used only on the oracle side of a comparison. They
// are built from the C++17 special math functions and from representations
// that the series kernel does not use (integral forms, roots of unity), so
// an agreement with specfun or closedforms is a genuine cross-check.

#include <complex>

#include "umbra/oracle.hpp"

namespace umbra::reference {

/// Y_nu(x) for any real order, x > 0.
double bessel_y(double nu, double x);

/// Struve K_nu(x) = H_nu(x) - Y_nu(x), x > 0. Integral representation for
/// nu > -1/2, three-term recurrence below.
double struve_k(double nu, double x);

/// H_nu(x), x >= 0: direct series with std::tgamma for x <= 8, Y + K above.
double struve_h(double nu, double x);

/// x below which struve_h uses its series.
inline constexpr double kStruveSeriesLimit = 8.0;

/// b_nu(x) for real x != 0 from the modified-Bessel form, with the
/// x < 0 branch written out: (sqrt(pi)/2) y^(1/2-nu) e^(-y/2) [I_(nu-1/2) - I_(nu+1/2)](y/2), y = -x.
double b_nu(double nu, double x);

/// I_mu(x) for any real order, x >= 0.
double bessel_i(double mu, double x);

/// c_k^(m)(z) = (1/m) sum_j w_j^{-k} exp(w_j z), w_j = exp(i pi (2j+1)/m).
double pseudo_trig(int k, int m, double x);

/// int_0^inf H_nu(b x) x^{-mu} dx split at X into a finite part, a damped
/// oscillatory Y tail and a smooth K tail. Convergence is the caller's
/// business (conditional for the first family, absolute for the second).
oracle::QuadratureResult struve_halfline(double nu, double b, double mu, double tol,
                                         oracle::Execution exec = oracle::Execution::parallel);

}  // namespace umbra::reference
