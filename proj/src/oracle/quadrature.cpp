#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <limits>
#include <queue>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "umbra/oracle.hpp"

namespace umbra::oracle {

namespace {

// QUADPACK qk21: 21-point Kronrod extension of the 10-point Gauss rule.
// Gauss nodes are xgk[1], xgk[3], ..., xgk[9].
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Segment {
  double a, b;
  complex value;
  double error;
  double magnitude;  // integral of |f|
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<complex, 10> f1{}, f2{};
  const complex fc = f(centre);
  complex res_k = fc * kWgk[10];
  complex res_g = 0.0;
  double res_abs = std::abs(fc) * kWgk[10];
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(centre - dx);
    f2[j] = f(centre + dx);
    const complex sum = f1[j] + f2[j];
    res_k += kWgk[j] * sum;
    res_abs += kWgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) res_g += kWg[j / 2] * sum;
  }
  const complex mean = 0.5 * res_k;
  double res_asc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) res_asc += kWgk[j] * (std::abs(f1[j] - mean) + std::abs(f2[j] - mean));

  const double scale = std::abs(half);
  res_abs *= scale;
  res_asc *= scale;
  double err = std::abs((res_k - res_g) * half);
  if (res_asc != 0.0 && err != 0.0) err = res_asc * std::min(1.0, std::pow(200.0 * err / res_asc, 1.5));
  if (res_abs > std::numeric_limits<double>::min() / (50.0 * kEps)) err = std::max(err, 50.0 * kEps * res_abs);
  if (!std::isfinite(res_k.real()) || !std::isfinite(res_k.imag())) err = std::numeric_limits<double>::infinity();
  return {a, b, res_k * half, err, res_abs};
}

QuadratureResult adaptive(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::priority_queue<Segment> heap;
  std::vector<Segment> done;  // too narrow to split further
  heap.push(gk21(f, a, b));
  long evals = 21;
  complex total = heap.top().value;
  double err = heap.top().error;
  double magnitude = heap.top().magnitude;

  // Cancellation puts a floor under the attainable error: once the estimate
  // is at the rounding level of int |f|, splitting further cannot help.
  auto target = [&] {
    return std::max({opts.abs_tol, opts.rel_tol * std::abs(total), 100.0 * kEps * magnitude});
  };
  while (err > target() && static_cast<int>(heap.size() + done.size()) < opts.max_intervals &&
         !heap.empty()) {
    const Segment s = heap.top();
    heap.pop();
    const double mid = 0.5 * (s.a + s.b);
    const double min_width = 64.0 * kEps * std::max(std::abs(s.a), std::abs(s.b));
    if (s.b - s.a <= min_width || mid <= s.a || mid >= s.b) {
      done.push_back(s);
      continue;
    }
    const Segment l = gk21(f, s.a, mid);
    const Segment r = gk21(f, mid, s.b);
    evals += 42;
    total += l.value + r.value - s.value;
    err += l.error + r.error - s.error;
    magnitude += l.magnitude + r.magnitude - s.magnitude;
    heap.push(l);
    heap.push(r);
  }

  // Re-add from scratch to shed the drift of the running updates.
  total = 0.0;
  err = 0.0;
  magnitude = 0.0;
  int n = 0;
  for (const auto& s : done) {
    total += s.value;
    err += s.error;
    magnitude += s.magnitude;
    ++n;
  }
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    magnitude += heap.top().magnitude;
    heap.pop();
    ++n;
  }
  out.value = total;
  out.abs_error_estimate = err;
  out.evaluations = evals;
  out.intervals = n;
  const double wanted = std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  out.converged = std::isfinite(err) && err <= (opts.floor_converges ? target() : wanted);
  if (!out.converged) out.note = "interval budget exhausted";
  return out;
}

}  // namespace

complex QuadratureResult::require() const {
  if (!converged) {
    std::ostringstream os;
    os << "quadrature did not converge (" << (note.empty() ? "unknown" : note)
       << "), estimate " << abs_error_estimate;
    throw OracleError(os.str(), *this);
  }
  return value;
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol) {
  return integrate_finite(f, a, b, QuadratureOptions::from_tol(tol));
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureOptions& opts) {
  if (!(a <= b)) throw DomainError("integrate_finite: need a <= b");
  return adaptive(f, a, b, opts);
}

QuadratureResult integrate_panels(const Integrand& f, std::span<const double> edges,
                                  const QuadratureOptions& per_panel, Execution exec) {
  QuadratureResult out;
  if (edges.size() < 2) {
    out.converged = true;
    return out;
  }
  const long n = static_cast<long>(edges.size()) - 1;
  std::vector<QuadratureResult> parts(n);
  std::exception_ptr failure;

  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
      try {
        parts[i] = adaptive(f, edges[i], edges[i + 1], per_panel);
      } catch (...) {
#pragma omp critical(umbra_panel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  } else {
    for (long i = 0; i < n; ++i) parts[i] = adaptive(f, edges[i], edges[i + 1], per_panel);
  }
  if (failure) std::rethrow_exception(failure);

  out.converged = true;
  for (const auto& p : parts) {
    out.value += p.value;
    out.abs_error_estimate += p.abs_error_estimate;
    out.evaluations += p.evaluations;
    out.intervals += p.intervals;
    out.converged = out.converged && p.converged;
  }
  if (!out.converged) out.note = "a panel exhausted its interval budget";
  return out;
}

SeriesSum<complex> series_sum(const std::function<complex(int)>& term, double tol, int cap) {
  SeriesControl ctl;
  ctl.rel_tol = tol;
  ctl.cap = cap;
  return sum_series<complex>(term, ctl, "series_sum");
}

}  // namespace umbra::oracle
