#pragma once

// Borel and Beta (Euler-kernel) transforms acting on coefficient laws.
//
//   Borel:  L(x) = int_0^inf e^{-t} g(x t) dt     multiplies [x^n] by n!
//   Beta:   I(x) = int_0^1 u^{a-1}(1-u)^{b-1} f(u x) du  multiplies [x^n] by B(a+n, b)

#include <limits>

#include "umbra/umbral.hpp"

namespace umbra::transforms {

struct CoefficientSeries {
  umbral::PowerSeriesSpec spec;
  /// Radius of convergence in x; infinity for entire series. Derived from
  /// the growth of the coefficient law when it is a Gamma ratio.
  double radius_hint = std::numeric_limits<double>::infinity();

  explicit CoefficientSeries(umbral::PowerSeriesSpec s);

  /// Coefficient of x^{stride k + offset}.
  complex coefficient(int k) const { return spec.coefficient(k); }
  /// Throws DomainError for |x| >= radius_hint.
  complex operator()(complex x, double tol = 1e-15) const;

  /// sum_k phi(k) (-x)^k / k!
  static CoefficientSeries from_moments(const umbral::GammaRatioSequence& phi);
  /// c_k^(m)(x) = sum_r (-1)^r x^{mr+k} / (mr+k)!
  static CoefficientSeries pseudo_trig(int k, int m);
  /// 1/(1 + x^m)
  static CoefficientSeries geometric(int m);
  /// e^x
  static CoefficientSeries exponential();
  /// Finite polynomial sum_j c_j x^j.
  static CoefficientSeries polynomial(std::vector<complex> c);
};

/// Radius of convergence implied by a Gamma-ratio law (0, finite, or inf).
double estimate_radius(const umbral::PowerSeriesSpec& spec);

CoefficientSeries borel_transform(const CoefficientSeries& g);
CoefficientSeries borel_inverse(const CoefficientSeries& L);

enum class BorelVariable { first, second };

/// Hybrid polynomial H~_n^(m)(x, y) as a polynomial in x (first) or y (second).
CoefficientSeries hybrid_polynomial(int n, int m, complex other, BorelVariable v);

/// Borel transform of H~_n^(m) in the chosen variable, evaluated at (x, y).
/// first: H_n^(m)(x, y)/n!; second: e_n^(m)(x, y).
complex borel_hybrid_hermite(int n, int m, complex x, complex y, BorelVariable v);

/// f = sum phi(n) (-a x)^n/n! (power 0, shift 0, stride 1) to the series
/// sum B(alpha+n, beta) phi(n) (-a x)^n / n!.
CoefficientSeries beta_transform(const umbral::UmbralSeries& f, double alpha, double beta);

}  // namespace umbra::transforms
