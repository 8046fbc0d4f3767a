#include "umbra/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "umbra/specfun.hpp"

namespace umbra::transforms {

using umbral::GammaFactor;
using umbral::GammaRatioSequence;
using umbral::PowerSeriesSpec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool same(const GammaFactor& a, const GammaFactor& b) {
  return a.shift == b.shift && a.slope == b.slope;
}

// Moves `f` out of `from` if present there, else appends it to `to`.
void cancel_or_add(std::vector<GammaFactor>& from, std::vector<GammaFactor>& to, GammaFactor f) {
  const auto it = std::find_if(from.begin(), from.end(), [&](const GammaFactor& g) { return same(f, g); });
  if (it != from.end()) from.erase(it);
  else to.push_back(f);
}

void check_offset(const PowerSeriesSpec& s, const char* what) {
  if (!(s.offset > -1.0)) throw DomainError(std::string(what) + ": lowest power must exceed -1");
}

}  // namespace

double estimate_radius(const PowerSeriesSpec& spec) {
  const auto* seq = spec.alpha.sequence();
  if (seq == nullptr) return kInf;
  double d = 0.0;
  double log_lim = std::log(std::abs(spec.ratio));
  for (const auto& f : seq->numer) {
    d += f.slope;
    log_lim += f.slope * std::log(f.slope);
  }
  for (const auto& f : seq->denom) {
    d -= f.slope;
    log_lim -= f.slope * std::log(f.slope);
  }
  if (d > 1e-12) return 0.0;
  if (d < -1e-12 || !std::isfinite(log_lim)) return kInf;
  return std::exp(-log_lim / spec.stride);
}

CoefficientSeries::CoefficientSeries(PowerSeriesSpec s)
    : spec(std::move(s)), radius_hint(estimate_radius(spec)) {}

complex CoefficientSeries::operator()(complex x, double tol) const {
  if (!spec.alpha.is_finite() && std::abs(x) >= radius_hint) {
    std::ostringstream os;
    os << "coefficient series: |x| = " << std::abs(x) << " outside radius " << radius_hint;
    throw DomainError(os.str());
  }
  return umbral::eval_power_series(spec, x, tol);
}

CoefficientSeries CoefficientSeries::from_moments(const GammaRatioSequence& phi) {
  PowerSeriesSpec s;
  GammaRatioSequence a = phi;
  a.denom.push_back({1.0, 1.0});
  s.alpha = a;
  s.alternating = true;
  return CoefficientSeries(s);
}

CoefficientSeries CoefficientSeries::pseudo_trig(int k, int m) {
  if (m < 2 || k < 0 || k >= m) throw DomainError("pseudo_trig series: need 0 <= k < m, m >= 2");
  PowerSeriesSpec s;
  s.alpha = GammaRatioSequence{1.0, {}, {{k + 1.0, double(m)}}};
  s.stride = m;
  s.offset = k;
  s.alternating = true;
  return CoefficientSeries(s);
}

CoefficientSeries CoefficientSeries::geometric(int m) {
  if (m < 1) throw DomainError("geometric series: need m >= 1");
  PowerSeriesSpec s;
  s.stride = m;
  s.alternating = true;
  return CoefficientSeries(s);
}

CoefficientSeries CoefficientSeries::exponential() {
  PowerSeriesSpec s;
  s.alpha = GammaRatioSequence::inverse_factorial();
  return CoefficientSeries(s);
}

CoefficientSeries CoefficientSeries::polynomial(std::vector<complex> c) {
  PowerSeriesSpec s;
  s.alpha = std::move(c);
  return CoefficientSeries(s);
}

CoefficientSeries borel_transform(const CoefficientSeries& g) {
  PowerSeriesSpec s = g.spec;
  check_offset(s, "borel_transform");
  if (const auto* list = s.alpha.list()) {
    std::vector<complex> c = *list;
    for (std::size_t j = 0; j < c.size(); ++j)
      c[j] *= specfun::gamma(s.stride * double(j) + s.offset + 1.0);
    s.alpha = std::move(c);
  } else {
    GammaRatioSequence a = *s.alpha.sequence();
    cancel_or_add(a.denom, a.numer, {s.offset + 1.0, double(s.stride)});
    s.alpha = std::move(a);
  }
  return CoefficientSeries(s);
}

CoefficientSeries borel_inverse(const CoefficientSeries& L) {
  PowerSeriesSpec s = L.spec;
  check_offset(s, "borel_inverse");
  if (const auto* list = s.alpha.list()) {
    std::vector<complex> c = *list;
    for (std::size_t j = 0; j < c.size(); ++j)
      c[j] /= specfun::gamma(s.stride * double(j) + s.offset + 1.0);
    s.alpha = std::move(c);
  } else {
    GammaRatioSequence a = *s.alpha.sequence();
    cancel_or_add(a.numer, a.denom, {s.offset + 1.0, double(s.stride)});
    s.alpha = std::move(a);
  }
  return CoefficientSeries(s);
}

CoefficientSeries hybrid_polynomial(int n, int m, complex other, BorelVariable v) {
  if (n < 0 || m < 2) throw DomainError("hybrid_polynomial: need n >= 0, m >= 2");
  const int kmax = n / m;
  auto inv_fact = [](int j) { return specfun::rgamma(j + 1.0); };
  std::vector<complex> c;
  if (v == BorelVariable::first) {
    // other = y; coefficient of x^{n-mk} is y^k / (k! ((n-mk)!)^2).
    c.assign(n + 1, 0.0);
    for (int k = 0; k <= kmax; ++k) {
      const int j = n - m * k;
      c[j] = std::pow(other, k) * inv_fact(k) * inv_fact(j) * inv_fact(j);
    }
  } else {
    // other = x; coefficient of y^k is x^{n-mk} / (k! ((n-mk)!)^2).
    c.assign(kmax + 1, 0.0);
    for (int k = 0; k <= kmax; ++k) {
      const int j = n - m * k;
      c[k] = std::pow(other, j) * inv_fact(k) * inv_fact(j) * inv_fact(j);
    }
  }
  return CoefficientSeries::polynomial(std::move(c));
}

complex borel_hybrid_hermite(int n, int m, complex x, complex y, BorelVariable v) {
  const bool first = v == BorelVariable::first;
  const auto L = borel_transform(hybrid_polynomial(n, m, first ? y : x, v));
  return L(first ? x : y);
}

CoefficientSeries beta_transform(const umbral::UmbralSeries& f, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("beta_transform: need alpha, beta > 0");
  if (f.power != 0.0 || f.shift != 0.0 || f.stride != 1)
    throw DomainError("beta_transform: f must be a plain series (power 0, shift 0, stride 1)");
  GammaRatioSequence a = f.phi;
  a.scale *= f.scale * specfun::gamma(beta);
  a.numer.push_back({alpha, 1.0});
  a.denom.push_back({alpha + beta, 1.0});
  a.denom.push_back({1.0, 1.0});
  PowerSeriesSpec s;
  s.alpha = std::move(a);
  s.alternating = true;
  s.ratio = f.arg_scale;
  return CoefficientSeries(s);
}

}  // namespace umbra::transforms
