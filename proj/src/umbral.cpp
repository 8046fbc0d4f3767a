#include "umbra/umbral.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "umbra/specfun.hpp"

namespace umbra::umbral {

namespace {

using specfun::is_gamma_pole;

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDirectLimit = 30.0;

// Non-positive integer index of a Gamma pole: Gamma(-m).
double pole_order(complex z) { return -z.real(); }

// Leading factor of Gamma(-m + slope * d) as d -> 0, without the 1/d.
double pole_residue(double m, double slope) {
  const double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
  return sign * std::exp(-std::lgamma(m + 1.0)) / slope;
}

// First pole of Gamma(shift - slope*mu) strictly right of `from`; the poles
// sit at mu = (shift + j)/slope, j = 0, 1, ...
double first_right_pole(double shift, double slope, double from) {
  double j = std::max(0.0, std::floor(slope * from - shift) + 1.0);
  return (shift + j) / slope;
}

complex real_power(complex x, double p) {
  if (p == 0.0) return 1.0;
  if (p == std::floor(p) && std::abs(p) < 4096.0) {
    complex r = 1.0;
    const int n = static_cast<int>(std::abs(p));
    for (int i = 0; i < n; ++i) r *= x;
    return p < 0.0 ? 1.0 / r : r;
  }
  return std::pow(x, p);
}

}  // namespace

// GammaRatioSequence ------------------------------------------------------------

void GammaRatioSequence::validate() const {
  for (const auto& f : numer)
    if (!(f.slope > 0.0)) throw DomainError("moment sequence: slopes must be positive");
  for (const auto& f : denom)
    if (!(f.slope > 0.0)) throw DomainError("moment sequence: slopes must be positive");
  complex at0;
  try {
    at0 = phi_eval(*this, 0.0);
  } catch (const PoleError&) {
    throw DomainError("moment sequence: phi(0) is infinite");
  }
  if (at0 == 0.0 || !std::isfinite(at0.real()) || !std::isfinite(at0.imag()))
    throw DomainError("moment sequence: phi(0) must be finite and non-zero");
}

complex GammaRatioSequence::operator()(complex s) const { return phi_eval(*this, s); }

GammaRatioSequence GammaRatioSequence::one() { return {}; }

GammaRatioSequence GammaRatioSequence::factorial() { return {1.0, {{1.0, 1.0}}, {}}; }

GammaRatioSequence GammaRatioSequence::inverse_factorial() { return {1.0, {}, {{1.0, 1.0}}}; }

GammaRatioSequence GammaRatioSequence::struve(double nu) {
  return {1.0, {{1.0, 1.0}}, {{1.5, 1.0}, {nu + 1.5, 1.0}}};
}

complex phi_eval(const GammaRatioSequence& phi, complex s) {
  int numer_poles = 0;
  int denom_poles = 0;
  int first_numer_pole = -1;
  double residue = 1.0;
  bool small = true;
  complex log_sum = 0.0;
  complex direct = 1.0;

  for (std::size_t i = 0; i < phi.numer.size(); ++i) {
    const complex z = phi.numer[i].shift + phi.numer[i].slope * s;
    if (is_gamma_pole(z)) {
      if (first_numer_pole < 0) first_numer_pole = static_cast<int>(i);
      ++numer_poles;
      residue *= pole_residue(pole_order(z), phi.numer[i].slope);
      continue;
    }
    if (std::abs(z) >= kDirectLimit) small = false;
    if (small) direct *= specfun::gamma(z);
    log_sum += specfun::lgamma_mod2pi(z);
  }
  for (const auto& f : phi.denom) {
    const complex z = f.shift + f.slope * s;
    if (is_gamma_pole(z)) {
      ++denom_poles;
      residue /= pole_residue(pole_order(z), f.slope);
      continue;
    }
    if (std::abs(z) >= kDirectLimit) small = false;
    if (small) direct *= specfun::rgamma(z);
    log_sum -= specfun::lgamma_mod2pi(z);
  }

  if (numer_poles > denom_poles) {
    std::ostringstream os;
    os << "phi(" << s.real() << (s.imag() != 0.0 ? " + i" + std::to_string(s.imag()) : "")
       << ") hits an uncancelled Gamma pole in numerator factor " << first_numer_pole;
    throw PoleError(os.str(), s, first_numer_pole);
  }
  if (denom_poles > numer_poles) return 0.0;
  const complex regular = small ? direct : std::exp(log_sum);
  return phi.scale * residue * regular;
}

// UmbralSeries -------------------------------------------------------------------

UmbralSeries UmbralSeries::exponential() { return {}; }

UmbralSeries UmbralSeries::rational() {
  UmbralSeries f;
  f.phi = GammaRatioSequence::factorial();
  return f;
}

UmbralSeries UmbralSeries::gaussian() {
  UmbralSeries f;
  f.stride = 2;
  return f;
}

UmbralSeries UmbralSeries::bessel_j(int n) {
  if (n < 0) throw DomainError("bessel_j series: n must be >= 0");
  UmbralSeries f;
  f.phi = GammaRatioSequence::inverse_factorial();
  f.power = n;
  f.shift = n;
  f.stride = 2;
  // J_n(2x) ~ x^{-1/2}: int x^{nu-1} J_n(2x) converges for nu < 3/2.
  f.mellin_mu_upper = 0.5 * n + 0.75;
  return f;
}

UmbralSeries UmbralSeries::struve_h(double nu, double b) {
  if (!(b > 0.0)) throw DomainError("struve series: b must be positive");
  UmbralSeries f;
  f.phi = GammaRatioSequence::struve(nu);
  f.power = nu + 1.0;
  f.stride = 2;
  f.arg_scale = 0.25 * b * b;
  f.scale = std::pow(0.5 * b, nu + 1.0);
  // Y_nu-type tail x^{-1/2}: conditionally convergent up to nu_M = 3/2.
  f.mellin_mu_upper = 0.5 * (nu + 2.5);
  return f;
}

complex eval_umbral_series(const UmbralSeries& f, complex x, double tol) {
  const complex w = -f.arg_scale * real_power(x, f.stride);
  // Skip over k where a denominator Gamma of phi(k + shift) sits on a pole.
  int lead = 0;
  for (const auto& d : f.phi.denom) {
    const double zero_at = (-d.shift / d.slope) - f.shift;
    if (zero_at >= 0.0) lead = std::max(lead, static_cast<int>(std::floor(zero_at)) + 1);
  }
  SeriesControl ctl;
  ctl.rel_tol = tol;
  ctl.min_terms = lead + 1;
  complex wk = 1.0;  // w^k / k!
  const auto s = sum_series<complex>(
      [&](int k) {
        if (k > 0) wk *= w / double(k);
        if (wk == 0.0) return complex(0.0);
        return phi_eval(f.phi, f.shift + k) * wk;
      },
      ctl, "umbral series");
  return f.scale * real_power(x, f.power) * s.value;
}

// Mellin evaluation --------------------------------------------------------------

Strip mellin_strip(const UmbralSeries& f) {
  Strip strip{0.0, kInf};
  // Gamma(shift + slope*(s - mu)) = Gamma((shift + slope*s) - slope*mu).
  for (const auto& n : f.phi.numer) {
    const double base = n.shift + n.slope * f.shift;
    double mu = first_right_pole(base, n.slope, 0.0);
    // A coinciding denominator pole cancels; move on to the next one.
    for (int guard = 0; guard < 64; ++guard) {
      bool cancelled = false;
      for (const auto& d : f.phi.denom) {
        if (is_gamma_pole(complex(d.shift + d.slope * (f.shift - mu)))) cancelled = true;
      }
      if (!cancelled) break;
      mu = first_right_pole(base, n.slope, mu);
    }
    strip.upper = std::min(strip.upper, mu);
  }
  if (f.mellin_mu_upper) strip.upper = std::min(strip.upper, *f.mellin_mu_upper);
  return strip;
}

complex mellin_master(const UmbralSeries& f, complex nu) {
  if (f.power != 0.0 || f.shift != 0.0 || f.stride != 1 || f.arg_scale != 1.0)
    throw DomainError("mellin_master: needs a plain series (p = s = 0, m = 1, a = 1)");
  f.phi.validate();
  const Strip strip = mellin_strip(f);
  if (!(nu.real() > strip.lower && nu.real() < strip.upper)) {
    std::ostringstream os;
    os << "mellin_master: Re nu = " << nu.real() << " outside the convergence strip ("
       << strip.lower << ", " << strip.upper << ")";
    throw DomainError(os.str());
  }
  return f.scale * specfun::gamma(nu) * phi_eval(f.phi, -nu);
}

complex mellin_master_strided(const UmbralSeries& f, complex nu) {
  if (f.stride < 1) throw DomainError("mellin_master_strided: stride must be >= 1");
  const complex mu = (nu + f.power) / double(f.stride);
  const Strip strip = mellin_strip(f);
  if (!(mu.real() > strip.lower && mu.real() < strip.upper)) {
    std::ostringstream os;
    os << "mellin_master_strided: mu = (nu + p)/m = " << mu.real()
       << " outside the convergence strip (" << strip.lower << ", " << strip.upper << ")";
    throw DomainError(os.str());
  }
  return f.scale / double(f.stride) * std::pow(f.arg_scale, -mu) * specfun::gamma(mu) *
         phi_eval(f.phi, f.shift - mu);
}

// CoefficientLaw / PowerSeriesSpec -----------------------------------------------

complex CoefficientLaw::at(int k) const {
  if (const auto* seq = sequence()) return phi_eval(*seq, double(k));
  const auto& v = *list();
  return k >= 0 && static_cast<std::size_t>(k) < v.size() ? v[k] : complex(0.0);
}

std::size_t CoefficientLaw::size() const { return is_finite() ? list()->size() : 0; }

int CoefficientLaw::leading_zeros() const {
  const auto* seq = sequence();
  if (seq == nullptr) return 0;
  int lead = 0;
  for (const auto& d : seq->denom) {
    const double zero_at = -d.shift / d.slope;
    if (zero_at >= 0.0) lead = std::max(lead, static_cast<int>(std::floor(zero_at)) + 1);
  }
  return lead;
}

complex PowerSeriesSpec::coefficient(int k) const {
  complex c = alpha.at(k);
  if (c == 0.0) return c;
  if (ratio != 1.0) c *= real_power(ratio, k);
  if (alternating && (k % 2 == 1)) c = -c;
  return c;
}

PowerSeriesSpec PowerSeriesSpec::monomial(double n) {
  PowerSeriesSpec f;
  f.alpha = std::vector<complex>{1.0};
  f.offset = n;
  return f;
}

PowerSeriesSpec PowerSeriesSpec::bessel_j(int n) {
  if (n < 0) throw DomainError("bessel_j spec: n must be >= 0");
  PowerSeriesSpec f;
  // (-1)^k (x/2)^{2k+n} / (k! (k+n)!)
  f.alpha = GammaRatioSequence{std::pow(0.5, n), {}, {{1.0, 1.0}, {n + 1.0, 1.0}}};
  f.stride = 2;
  f.offset = n;
  f.alternating = true;
  f.ratio = 0.25;
  return f;
}

PowerSeriesSpec PowerSeriesSpec::x2_gaussian() {
  PowerSeriesSpec f;
  f.alpha = GammaRatioSequence::inverse_factorial();
  f.stride = 2;
  f.offset = 2.0;
  f.alternating = true;
  return f;
}

namespace {

// sum_k c(k) x^{mk+p} with an optional per-exponent multiplier.
template <class Weight>
complex sum_power_series(const PowerSeriesSpec& f, complex x, double tol, Weight&& weight,
                         const char* what) {
  if (f.stride < 1) throw DomainError(std::string(what) + ": stride must be >= 1");
  const complex xp = real_power(x, f.offset);
  const complex xm = real_power(x, f.stride);
  SeriesControl ctl;
  ctl.rel_tol = tol;
  ctl.min_terms = f.alpha.leading_zeros() + 1;
  if (f.alpha.is_finite()) {
    complex sum = 0.0;
    complex xk = 1.0;
    for (std::size_t k = 0; k < f.alpha.size(); ++k) {
      const double expo = f.stride * double(k) + f.offset;
      sum += f.coefficient(static_cast<int>(k)) * weight(expo) * xk;
      xk *= xm;
    }
    return xp * sum;
  }
  complex xk = 1.0;
  const auto s = sum_series<complex>(
      [&](int k) {
        if (k > 0) xk *= xm;
        const complex c = f.coefficient(k);
        if (c == 0.0) return complex(0.0);
        return c * weight(f.stride * double(k) + f.offset) * xk;
      },
      ctl, what);
  return xp * s.value;
}

}  // namespace

complex eval_power_series(const PowerSeriesSpec& f, complex x, double tol) {
  return sum_power_series(
      f, x, tol, [](double) { return complex(1.0); }, "power series");
}

// MellinMultiplier ------------------------------------------------------------------

MellinMultiplier MellinMultiplier::gaussian_kernel() { return MellinMultiplier(Kind::gaussian_kernel); }

MellinMultiplier MellinMultiplier::lorentz_power() { return MellinMultiplier(Kind::lorentz_power); }

MellinMultiplier MellinMultiplier::borel_factorial() { return MellinMultiplier(Kind::borel_factorial); }

MellinMultiplier MellinMultiplier::beta_kernel(double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("beta kernel: need alpha, beta > 0");
  MellinMultiplier m(Kind::beta_kernel);
  m.alpha_ = alpha;
  m.beta_ = beta;
  return m;
}

MellinMultiplier MellinMultiplier::custom(std::function<complex(double)> f, double lower,
                                          std::string name) {
  MellinMultiplier m(Kind::custom);
  m.fn_ = std::move(f);
  m.lower_ = lower;
  m.name_ = std::move(name);
  return m;
}

std::string MellinMultiplier::name() const {
  switch (kind_) {
    case Kind::gaussian_kernel: return "gaussian";
    case Kind::lorentz_power: return "lorentz";
    case Kind::borel_factorial: return "borel";
    case Kind::beta_kernel: {
      std::ostringstream os;
      os << "beta(" << alpha_ << "," << beta_ << ")";
      return os.str();
    }
    case Kind::custom: return name_;
  }
  return "?";
}

double MellinMultiplier::lower_bound() const {
  switch (kind_) {
    case Kind::gaussian_kernel: return 0.0;
    case Kind::lorentz_power: return 0.5;
    case Kind::borel_factorial: return -1.0;
    case Kind::beta_kernel: return -alpha_;
    case Kind::custom: return lower_;
  }
  return 0.0;
}

complex MellinMultiplier::operator()(double a) const {
  if (!(a > lower_bound())) {
    std::ostringstream os;
    os << "Mellin multiplier '" << name() << "' needs a > " << lower_bound() << ", got " << a;
    throw DomainError(os.str());
  }
  switch (kind_) {
    case Kind::gaussian_kernel: return std::sqrt(kPi / a);
    case Kind::lorentz_power: return std::sqrt(kPi) * specfun::gamma_ratio(a - 0.5, a);
    case Kind::borel_factorial: return specfun::gamma(complex(a + 1.0));
    case Kind::beta_kernel: return specfun::beta(alpha_ + a, beta_);
    case Kind::custom: return fn_(a);
  }
  return 0.0;
}

complex apply_mellin_multiplier(const MellinMultiplier& F, const PowerSeriesSpec& f, double x,
                                double tol) {
  // Smallest exponent is the offset (k = 0); check it up front.
  (void)F(f.offset);
  return sum_power_series(
      f, x, tol, [&](double expo) { return F(expo); }, "Mellin multiplier series");
}

}  // namespace umbra::umbral
