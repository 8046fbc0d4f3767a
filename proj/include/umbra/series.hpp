#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

namespace umbra {

using complex = std::complex<double>;

/// Bookkeeping left behind by a truncated series.
struct SeriesTail {
  int terms_used = 0;
  double last_term_magnitude = 0.0;
  bool converged = false;
};

/// Stopping rule shared by every series in the library: stop once
/// |term| <= rel_tol * |partial sum| (or <= abs_tol) holds for
/// `quiet_terms` consecutive terms, never before `min_terms` terms.
struct SeriesControl {
  double rel_tol = 1e-16;
  double abs_tol = 0.0;
  int cap = 10'000;
  int min_terms = 1;
  int quiet_terms = 3;
};

inline constexpr SeriesControl kDefaultSeries{};

template <class T>
struct SeriesSum {
  T value{};
  SeriesTail tail;
};

namespace detail {
[[noreturn]] void throw_series_cap(const std::string& what, const SeriesTail& tail,
                                   complex partial);
}

/// Sums term(0) + term(1) + ... under `ctl`. `term` is called with
/// consecutive indices starting at 0, so it may carry recurrence state.
/// Throws ConvergenceError (tagged with `what`) when the cap is exceeded.
template <class T, class TermFn>
SeriesSum<T> sum_series(TermFn&& term, const SeriesControl& ctl = kDefaultSeries,
                        const char* what = "series") {
  SeriesSum<T> out;
  T sum{};
  int quiet = 0;
  double last = 0.0;
  for (int k = 0; k < ctl.cap; ++k) {
    const T t = term(k);
    sum += t;
    last = std::abs(t);
    const double bound = std::max(ctl.rel_tol * std::abs(sum), ctl.abs_tol);
    quiet = (last <= bound) ? quiet + 1 : 0;
    if (k + 1 >= ctl.min_terms && quiet >= ctl.quiet_terms) {
      out.value = sum;
      out.tail = {k + 1, last, true};
      return out;
    }
  }
  detail::throw_series_cap(what, {ctl.cap, last, false}, complex(sum));
}

}  // namespace umbra
