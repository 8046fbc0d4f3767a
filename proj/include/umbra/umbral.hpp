#pragma once

// Umbral (moment-sequence) representation of special functions.
//
// A function is written as f(x) = C x^p sum_k phi(k+s) (-a x^m)^k / k!,
// where the moment sequence phi is a ratio of Gamma products. Writing
// phi(n) = c^n phi(0) for a formal operator c turns such series into
// exponentials e^{-c a x^m}, and integrals over x then reduce to Gamma
// integrals evaluated at a continued (possibly negative) index of phi.

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "umbra/error.hpp"
#include "umbra/series.hpp"

namespace umbra::umbral {

/// Gamma(shift + slope * s).
struct GammaFactor {
  double shift = 0.0;
  double slope = 1.0;
};

/// phi(s) = scale * prod Gamma(numer_i(s)) / prod Gamma(denom_j(s)).
struct GammaRatioSequence {
  complex scale = 1.0;
  std::vector<GammaFactor> numer;
  std::vector<GammaFactor> denom;

  /// Throws DomainError on a non-positive slope or when phi(0) is not a
  /// finite non-zero number.
  void validate() const;

  complex operator()(complex s) const;

  // Cataloged sequences.
  static GammaRatioSequence one();                    // phi = 1         (e^{-x})
  static GammaRatioSequence factorial();              // Gamma(1+s)      (1/(1+x))
  static GammaRatioSequence inverse_factorial();      // 1/Gamma(1+s)    (Bessel)
  static GammaRatioSequence struve(double nu);        // Gamma(s+1)/(Gamma(s+3/2)Gamma(s+nu+3/2))
};

/// phi(s) with the removable cases: a denominator pole not matched by a
/// numerator pole gives exactly 0; matched poles give the limit; an
/// unmatched numerator pole throws PoleError carrying the factor index.
complex phi_eval(const GammaRatioSequence& phi, complex s);

/// f(x) = scale * x^power * sum_k phi(k + shift) (-arg_scale x^stride)^k / k!
struct UmbralSeries {
  GammaRatioSequence phi;
  double power = 0.0;
  double shift = 0.0;
  int stride = 1;
  complex arg_scale = 1.0;
  complex scale = 1.0;
  /// Upper end of the Mellin convergence strip in mu = (nu + power)/stride
  /// beyond what the poles of phi dictate (oscillatory tails).
  std::optional<double> mellin_mu_upper;

  static UmbralSeries exponential();                   // e^{-x}
  static UmbralSeries rational();                      // 1/(1+x)
  static UmbralSeries gaussian();                      // e^{-x^2}
  static UmbralSeries bessel_j(int n);                 // J_n(2x)
  static UmbralSeries struve_h(double nu, double b = 1.0);  // H_nu(b x)
};

complex eval_umbral_series(const UmbralSeries& f, complex x, double tol = 1e-15);

/// Mellin transform int_0^inf x^{nu-1} f(x) dx = Gamma(nu) phi(-nu) for a
/// plain series (power 0, shift 0, stride 1, arg_scale 1). Throws
/// DomainError outside the convergence strip.
complex mellin_master(const UmbralSeries& f, complex nu);

/// General series via u = a x^m:
/// (C/m) a^{-mu} Gamma(mu) phi(s - mu),  mu = (nu + p)/m.
complex mellin_master_strided(const UmbralSeries& f, complex nu);

/// Open strip (lower, upper) in mu where the Mellin integral converges.
struct Strip {
  double lower = 0.0;
  double upper = 0.0;
};
Strip mellin_strip(const UmbralSeries& f);

// Mellin multipliers -----------------------------------------------------------

/// Coefficient law: a Gamma-ratio sequence or an explicit finite list.
class CoefficientLaw {
public:
  CoefficientLaw(GammaRatioSequence seq) : law_(std::move(seq)) {}
  CoefficientLaw(std::vector<complex> coeffs) : law_(std::move(coeffs)) {}

  complex at(int k) const;
  bool is_finite() const { return std::holds_alternative<std::vector<complex>>(law_); }
  /// Number of stored coefficients for a finite law (0 otherwise).
  std::size_t size() const;
  /// Smallest k from which every coefficient may be non-zero (skips the
  /// leading zeros a denominator pole forces).
  int leading_zeros() const;

  const GammaRatioSequence* sequence() const { return std::get_if<GammaRatioSequence>(&law_); }
  const std::vector<complex>* list() const { return std::get_if<std::vector<complex>>(&law_); }

private:
  std::variant<GammaRatioSequence, std::vector<complex>> law_;
};

/// f(x) = sum_k sign^k ratio^k alpha(k) x^{stride k + offset}, with
/// sign = -1 when `alternating`.
struct PowerSeriesSpec {
  CoefficientLaw alpha = GammaRatioSequence::one();
  int stride = 1;
  double offset = 0.0;
  bool alternating = false;
  complex ratio = 1.0;

  /// Full coefficient of x^{stride k + offset}.
  complex coefficient(int k) const;

  static PowerSeriesSpec monomial(double n);
  static PowerSeriesSpec bessel_j(int n);      // J_n(x)
  static PowerSeriesSpec x2_gaussian();        // x^2 e^{-x^2}
};

complex eval_power_series(const PowerSeriesSpec& f, complex x, double tol = 1e-15);

/// F(a) = int [g(t)]^a dt for the supported dilation kernels g.
class MellinMultiplier {
public:
  enum class Kind { gaussian_kernel, lorentz_power, borel_factorial, beta_kernel, custom };

  static MellinMultiplier gaussian_kernel();                 // g = e^{-t^2}, t in R
  static MellinMultiplier lorentz_power();                   // g = 1/(1+t^2), t in R
  static MellinMultiplier borel_factorial();                 // e^{-t} g(xt), t > 0
  static MellinMultiplier beta_kernel(double alpha, double beta);  // Euler kernel on (0,1)
  /// Test hook: any F valid for a > lower.
  static MellinMultiplier custom(std::function<complex(double)> f, double lower,
                                 std::string name = "custom");

  Kind kind() const { return kind_; }
  std::string name() const;
  /// F is defined for a strictly above this bound.
  double lower_bound() const;
  /// Throws DomainError when a <= lower_bound().
  complex operator()(double a) const;

private:
  MellinMultiplier(Kind k) : kind_(k) {}
  Kind kind_;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  double lower_ = 0.0;
  std::string name_;
  std::function<complex(double)> fn_;
};

/// sum_k alpha(k) F(mk + p) x^{mk + p}, i.e. F(x d/dx) applied to f.
complex apply_mellin_multiplier(const MellinMultiplier& F, const PowerSeriesSpec& f, double x,
                                double tol = 1e-15);

}  // namespace umbra::umbral
