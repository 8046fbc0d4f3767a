#include "umbra/closedforms.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "umbra/umbral.hpp"

namespace umbra::closedforms {

namespace {

constexpr double kPi = std::numbers::pi;
const complex kI(0.0, 1.0);

}  // namespace

complex fresnel_bessel(double nu, double alpha, double beta, specfun::BnuMethod method) {
  if (!(nu >= 0.0)) throw DomainError("fresnel_bessel: need nu >= 0");
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("fresnel_bessel: need alpha, beta > 0");
  if (!(alpha * alpha < 4.0 * beta)) throw DomainError("fresnel_bessel: need alpha^2 < 4 beta");
  // (i/beta)^{nu+1} on the principal branch: arg(i/beta) = pi/2.
  const complex phase = std::exp((nu + 1.0) * complex(-std::log(beta), 0.5 * kPi));
  const complex arg(0.0, -alpha * alpha / (4.0 * beta));
  return 0.5 * std::pow(0.5 * alpha, 2.0 * nu) * phase * specfun::b_nu(nu, arg, method);
}

complex fresnel_bessel_order0(double alpha, double beta) {
  if (!(beta > 0.0)) throw DomainError("fresnel_bessel_order0: need beta > 0");
  return kI / (2.0 * beta) * std::exp(complex(0.0, -alpha * alpha / (4.0 * beta)));
}

double struve_halfline_integral(double nu, double b) {
  if (!(nu > -2.0 && nu < 0.0)) throw DomainError("struve_halfline_integral: need -2 < nu < 0");
  if (!(b > 0.0)) throw DomainError("struve_halfline_integral: need b > 0");
  // -cot(pi nu/2)/b; cospi gives an exact zero at nu = -1.
  return -specfun::cospi(0.5 * nu) / (b * specfun::sinpi(0.5 * nu));
}

double struve_moment_integral(double nu) {
  if (!(nu > -0.5)) throw DomainError("struve_moment_integral: need nu > -1/2");
  return kPi * std::exp2(-nu) * specfun::rgamma(1.0 + nu);
}

double bessel_generating_function(double x, double t, int m, GenMethod method, double tol) {
  if (m < 2) throw DomainError("bessel_generating_function: need m >= 2");
  SeriesControl ctl;
  ctl.rel_tol = tol;
  if (method == GenMethod::tricomi) {
    const complex y = std::pow(-x, m) * t;
    return specfun::hermite_tricomi(0, m, x * x, y, ctl).real();
  }
  // Direct: J_{mn}(2x) decays like x^{mn}/(mn)!, so the plain stopping rule
  // applies once the order passes 2x.
  ctl.min_terms = static_cast<int>(2.0 * std::abs(x) / m) + 2;
  double tn = 1.0;  // t^n / n!
  const auto s = sum_series<double>(
      [&](int n) {
        if (n > 0) tn *= t / n;
        if (tn == 0.0) return 0.0;
        return tn * specfun::bessel_j(double(m) * n, 2.0 * x);
      },
      ctl, "generating function");
  return s.value;
}

double bessel_gauss_dilation(int n, double x, double tol) {
  if (n <= 0) throw DomainError("bessel_gauss_dilation: need integer n > 0");
  return umbral::apply_mellin_multiplier(umbral::MellinMultiplier::gaussian_kernel(),
                                         umbral::PowerSeriesSpec::bessel_j(n), x, tol)
      .real();
}

double lorentz_gauss_integral(double x, LorentzMethod method) {
  const double y = -x * x;
  switch (method) {
    case LorentzMethod::hypergeometric:
      return 0.5 * kPi * specfun::hyper_pfq({0.75, 1.25}, {1.0, 1.5}, y).real();
    case LorentzMethod::series:
    case LorentzMethod::paper_literal: {
      const bool literal = method == LorentzMethod::paper_literal;
      double yk = 1.0;  // y^k / k!
      const auto s = sum_series<double>(
          [&](int k) {
            if (k > 0) yk *= y / k;
            if (yk == 0.0) return 0.0;
            const double w = literal ? specfun::gamma(2.0 * k + 1.5) / (2.0 * k + 2.0)
                                     : specfun::gamma_ratio(2.0 * k + 1.5, 2.0 * k + 2.0).real();
            return yk * w;
          },
          kDefaultSeries, literal ? "Lorentz-Gauss series (literal)" : "Lorentz-Gauss series");
      return std::sqrt(kPi) * s.value;
    }
    case LorentzMethod::multiplier: {
      const auto F = umbral::MellinMultiplier::lorentz_power();
      if (x == 0.0) return F(2.0).real();
      return umbral::apply_mellin_multiplier(F, umbral::PowerSeriesSpec::x2_gaussian(), x).real() /
             (x * x);
    }
  }
  return 0.0;
}

// Catalog -----------------------------------------------------------------------

bool ParamRange::contains(double v) const {
  if (!std::isfinite(v)) return false;
  if (integer && v != std::floor(v)) return false;
  if (lo_open ? !(v > lo) : !(v >= lo)) return false;
  if (hi_open ? !(v < hi) : !(v <= hi)) return false;
  return true;
}

std::string ParamRange::describe() const {
  std::ostringstream os;
  os << name << (integer ? " integer " : " ") << "in ";
  const bool has_lo = lo > -1e299, has_hi = hi < 1e299;
  os << (has_lo && !lo_open ? '[' : '(');
  if (has_lo) os << lo; else os << "-inf";
  os << ", ";
  if (has_hi) os << hi; else os << "inf";
  os << (has_hi && !hi_open ? ']' : ')');
  return os.str();
}

std::string to_string(LhsKind k) { return k == LhsKind::quadrature ? "quadrature" : "double_series"; }
std::string to_string(RhsKind k) { return k == RhsKind::closed_form ? "closed_form" : "single_series"; }

std::optional<std::string> IdentityDescriptor::reject(const Point& p) const {
  for (const auto& r : domain) {
    const auto it = p.find(r.name);
    if (it == p.end()) return "missing parameter '" + r.name + "'";
    if (!r.contains(it->second)) {
      std::ostringstream os;
      os << r.name << " = " << it->second << " violates " << r.describe();
      return os.str();
    }
  }
  for (const auto& [k, v] : p) {
    bool known = false;
    for (const auto& r : domain) known = known || r.name == k;
    if (!known) return "unknown parameter '" + k + "'";
  }
  if (check) return check(p);
  return std::nullopt;
}

namespace {

ParamRange open_above(std::string n, double lo) { return {std::move(n), lo, 1e300, true, false, false}; }
ParamRange closed_above(std::string n, double lo) { return {std::move(n), lo, 1e300, false, false, false}; }
ParamRange interval(std::string n, double lo, double hi, bool lo_open, bool hi_open) {
  return {std::move(n), lo, hi, lo_open, hi_open, false};
}
ParamRange integers_from(std::string n, double lo) { return {std::move(n), lo, 1e300, false, false, true}; }

std::vector<IdentityDescriptor> build_catalog() {
  std::vector<IdentityDescriptor> c;

  c.push_back({"eq02_mellin_exp", "2", "int_0^inf x^(nu-1) e^(-x) dx = Gamma(nu) phi(-nu), phi = 1",
               {open_above("nu", 0.0)}, "", nullptr, LhsKind::quadrature, RhsKind::closed_form, 1e-8,
               "nu=0.25,0.3333333333333333,0.5,0.75", {}});

  c.push_back({"eq02_mellin_rational", "2",
               "int_0^inf x^(nu-1)/(1+x) dx = Gamma(nu) phi(-nu), phi(s) = Gamma(1+s)",
               {interval("nu", 0.0, 1.0, true, true)}, "", nullptr, LhsKind::quadrature,
               RhsKind::closed_form, 1e-8, "nu=0.25,0.3333333333333333,0.5,0.75", {}});

  c.push_back({"eq07_b_nu", "7",
               "b_nu(x) series = (sqrt(pi)/2) x^(1/2-nu) e^(x/2) [I_(nu-1/2)(x/2) + I_(nu+1/2)(x/2)]",
               {closed_above("nu", 0.0), interval("x", -50.0, 50.0, false, false)}, "x != 0",
               [](const Point& p) -> std::optional<std::string> {
                 if (p.at("x") == 0.0) return "x = 0 is outside the closed form's domain";
                 return std::nullopt;
               },
               LhsKind::double_series, RhsKind::closed_form, 1e-10,
               "nu=0,0.5,1,1.5,2;x=-5,-2.5,-0.5,0.5,2.5,5", {}});

  auto fresnel_check = [](const Point& p) -> std::optional<std::string> {
    const double a = p.at("alpha"), b = p.at("beta");
    if (!(a * a < 4.0 * b)) return "alpha^2 < 4 beta fails";
    return std::nullopt;
  };
  c.push_back({"eq07_fresnel_bessel", "7",
               "int_0^inf x J_(2nu)(alpha x) e^(i beta x^2) dx = (1/2)(alpha/2)^(2nu)(i/beta)^(nu+1) "
               "b_nu(-i alpha^2/(4 beta))",
               {closed_above("nu", 0.0), open_above("alpha", 0.0), open_above("beta", 0.0)},
               "alpha^2 < 4 beta", fresnel_check, LhsKind::quadrature, RhsKind::closed_form, 1e-6,
               "nu=0.5,1;alpha=1;beta=1,2", {}});

  c.push_back({"eq08_fresnel_bessel", "8",
               "int_0^inf x J_0(alpha x) e^(i beta x^2) dx = (i/(2 beta)) exp(-i alpha^2/(4 beta))",
               {open_above("alpha", 0.0), open_above("beta", 0.0)}, "alpha^2 < 4 beta", fresnel_check,
               LhsKind::quadrature, RhsKind::closed_form, 1e-6, "alpha=0.5,1,2;beta=2,5", {}});

  c.push_back({"eq12_struve_halfline", "12", "int_0^inf H_nu(b x) dx = -1/(b tan(pi nu/2))",
               {interval("nu", -2.0, 0.0, true, true), open_above("b", 0.0)}, "", nullptr,
               LhsKind::quadrature, RhsKind::closed_form, 1e-6, "nu=-1.5,-1,-0.5;b=1,2", {}});

  c.push_back({"eq13_struve_moment", "13",
               "int_R x^(-(nu+1)) H_nu(x) dx = pi/(2^nu Gamma(1+nu))", {open_above("nu", -0.5)}, "",
               nullptr, LhsKind::quadrature, RhsKind::closed_form, 1e-6, "nu=0,0.5,1,2", {}});

  c.push_back({"eq19_generating_function", "19",
               "sum_n t^n/n! J_(mn)(2x) = C_0^(m)(x^2, (-x)^m t)",
               {integers_from("m", 2.0), interval("x", -10.0, 10.0, false, false),
                interval("t", -4.0, 4.0, false, false)},
               "", nullptr, LhsKind::double_series, RhsKind::single_series, 1e-8,
               "m=2,3;x=0.25,0.5,1,2;t=-1,-0.5,0.5,1", {}});

  c.push_back({"eq28_bessel_gauss", "28",
               "int_R J_n(x e^(-t^2)) dt = sqrt(pi) sum_k (-1)^k (x/2)^(2k+n) / (k! (k+n)! sqrt(2k+n))",
               {integers_from("n", 1.0), interval("x", -20.0, 20.0, false, false)}, "", nullptr,
               LhsKind::quadrature, RhsKind::single_series, 1e-8, "n=1,2,3;x=0.5,1,2,4", {}});

  c.push_back({"eq30_lorentz_gauss", "30",
               "int_R exp[-x^2/(1+t^2)^2]/(1+t^2)^2 dt = (pi/2) 2F2(3/4,5/4;1,3/2;-x^2)",
               {interval("x", -6.0, 6.0, false, false)}, "", nullptr, LhsKind::quadrature,
               RhsKind::closed_form, 1e-8, "x=0,0.5,1,2,3",
               {"hypergeometric", "series", "multiplier", "paper-literal"}});

  c.push_back({"eq33_borel_bessel", "33",
               "int_0^inf e^(-t) g(x t) dt = J_0(2 sqrt(x)), g(x) = sum_k (-x)^k/(k!)^3",
               {interval("x", 0.0, 4.0, false, false)}, "", nullptr, LhsKind::quadrature,
               RhsKind::single_series, 1e-8, "x=0,0.2,0.5,1,2", {}});

  c.push_back({"eq34_borel_hybrid", "34",
               "int_0^inf e^(-t) H~_n^(m)(x t, y) dt = H_n^(m)(x, y)/n!; in y: e_n^(m)(x, y)",
               {integers_from("n", 0.0), integers_from("m", 2.0),
                interval("x", -10.0, 10.0, false, false), interval("y", -10.0, 10.0, false, false)},
               "", nullptr, LhsKind::quadrature, RhsKind::closed_form, 1e-8,
               "n=0,2,5,8;m=2,3;x=0.5,-1.5;y=0.75", {"first", "second"}});

  c.push_back({"eq35_borel_pseudo_trig", "35",
               "int_0^inf e^(-t) c_0^(m)(x t) dt = 1/(1+x^m), |x| < 1",
               {integers_from("m", 2.0), interval("x", -1.0, 1.0, true, true)}, "", nullptr,
               LhsKind::quadrature, RhsKind::closed_form, 1e-8, "m=2,3;x=0.2,0.5,0.8", {}});

  c.push_back({"eq38_beta_transform", "38",
               "int_0^1 u^(alpha-1)(1-u)^(beta-1) f(u x) du = sum_n B(alpha+n, beta) phi(n) (-x)^n/n!",
               {open_above("alpha", 0.0), open_above("beta", 0.0), interval("x", -10.0, 10.0, false, false)},
               "", nullptr, LhsKind::quadrature, RhsKind::single_series, 1e-8,
               "alpha=1,2,0.5;beta=1,3,0.5;x=0,1,3", {"exp", "bessel"}});

  return c;
}

}  // namespace

const std::vector<IdentityDescriptor>& catalog() {
  static const std::vector<IdentityDescriptor> c = build_catalog();
  return c;
}

const IdentityDescriptor* find_identity(std::string_view id) {
  for (const auto& d : catalog())
    if (d.id == id) return &d;
  return nullptr;
}

}  // namespace umbra::closedforms
