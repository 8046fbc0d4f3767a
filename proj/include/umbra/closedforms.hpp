#pragma once

// Closed-form evaluations of the cataloged definite integrals, plus the
// catalog itself (ids, parameter domains, default grids and tolerances).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umbra/specfun.hpp"

namespace umbra::closedforms {

// Integrals ------------------------------------------------------------------

/// B_nu(alpha, beta) = int_0^inf x J_{2nu}(alpha x) e^{i beta x^2} dx
///   = (1/2)(alpha/2)^{2nu} (i/beta)^{nu+1} b_nu(-i alpha^2/(4 beta)),
/// principal branch for (i/beta)^{nu+1}. Needs nu >= 0, alpha^2 < 4 beta.
complex fresnel_bessel(double nu, double alpha, double beta,
                       specfun::BnuMethod method = specfun::BnuMethod::series);

/// The nu = 0 case written out: (i/(2 beta)) exp(-i alpha^2/(4 beta)).
complex fresnel_bessel_order0(double alpha, double beta);

/// int_0^inf H_nu(b x) dx = -1/(b tan(pi nu/2)), -2 < nu < 0.
double struve_halfline_integral(double nu, double b);

/// int_R x^{-(nu+1)} H_nu(x) dx = pi/(2^nu Gamma(1+nu)), nu > -1/2.
double struve_moment_integral(double nu);

enum class GenMethod { direct, tricomi };

/// G(x, t | m) = sum_n t^n/n! J_{mn}(2x); the tricomi method evaluates the
/// Hermite-based Tricomi function C_0^(m)(x^2, (-x)^m t) instead.
double bessel_generating_function(double x, double t, int m, GenMethod method,
                                  double tol = 1e-16);

/// int_R J_n(x e^{-t^2}) dt as a Mellin-multiplier series, integer n > 0.
double bessel_gauss_dilation(int n, double x, double tol = 1e-16);

enum class LorentzMethod {
  series,          // sqrt(pi) sum (-x^2)^k/k! Gamma(2k+3/2)/Gamma(2k+2)
  hypergeometric,  // (pi/2) 2F2(3/4, 5/4; 1, 3/2; -x^2)
  multiplier,      // F(x d/dx) on x^2 e^{-x^2} with F the Lorentz kernel, / x^2
  paper_literal,   // Gamma(2k+3/2)/(2k+2): wrong by a factor Gamma(2k+1)
};

/// int_R exp[-x^2/(1+t^2)^2] / (1+t^2)^2 dt.
double lorentz_gauss_integral(double x, LorentzMethod method = LorentzMethod::hypergeometric);

// Catalog ------------------------------------------------------------------------

using Point = std::map<std::string, double>;

struct ParamRange {
  std::string name;
  double lo = -1e300;
  double hi = 1e300;
  bool lo_open = false;
  bool hi_open = false;
  bool integer = false;

  bool contains(double v) const;
  std::string describe() const;
};

enum class LhsKind { quadrature, double_series };
enum class RhsKind { closed_form, single_series };

std::string to_string(LhsKind k);
std::string to_string(RhsKind k);

struct IdentityDescriptor {
  std::string id;
  std::string equation;  // tag shown in listings and reports
  std::string summary;
  std::vector<ParamRange> domain;
  /// Extra joint condition, described in words; `check` returns a reason
  /// when a point violates it.
  std::string constraint;
  std::function<std::optional<std::string>(const Point&)> check;
  LhsKind lhs = LhsKind::quadrature;
  RhsKind rhs = RhsKind::closed_form;
  double default_tol = 1e-8;
  std::string default_grid;  // e.g. "nu=-1.5,-1,-0.5;b=1,2"
  std::vector<std::string> variants;  // first entry is the default

  /// Reason the point is outside the domain, or nullopt.
  std::optional<std::string> reject(const Point& p) const;
};

const std::vector<IdentityDescriptor>& catalog();
const IdentityDescriptor* find_identity(std::string_view id);

}  // namespace umbra::closedforms
