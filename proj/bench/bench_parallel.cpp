// Serial vs OpenMP timings for the panelled quadrature and for verifying
// the whole catalog. Usage: bench_parallel [repeats]

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "umbra/cli.hpp"
#include "umbra/closedforms.hpp"
#include "umbra/oracle.hpp"

using namespace umbra;
using Clock = std::chrono::steady_clock;

namespace {

double best_of(int repeats, const std::function<void()>& fn) {
  double best = INFINITY;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = Clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "DIFFERENT");
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  std::printf("threads: %d, best of %d\n", omp_get_max_threads(), repeats);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  {
    // damped oscillatory integrand over 400 periods
    const oracle::Integrand f = [](double x) -> complex {
      return std::exp(-0.01 * x) * std::cos(x) * std::cyl_bessel_j(1.0, x);
    };
    std::vector<double> edges;
    for (int i = 0; i <= 400; ++i) edges.push_back(i * 6.283185307179586);
    const auto opts = oracle::QuadratureOptions::from_tol(1e-13);
    oracle::QuadratureResult s, p;
    const double ts = best_of(repeats, [&] { s = oracle::integrate_panels(f, edges, opts, oracle::Execution::serial); });
    const double tp = best_of(repeats, [&] { p = oracle::integrate_panels(f, edges, opts, oracle::Execution::parallel); });
    row("integrate_panels (400)", ts, tp, s.value == p.value);
  }

  double total_s = 0.0, total_p = 0.0;
  bool all_same = true;
  for (const auto& id : closedforms::catalog()) {
    const auto grid = cli::GridSpec::parse(id.default_grid);
    cli::VerifyOptions ser, par;
    ser.exec = oracle::Execution::serial;
    std::vector<cli::VerificationRecord> a, b;
    const double ts = best_of(repeats, [&] { a = cli::verify_identity(id, grid, ser); });
    const double tp = best_of(repeats, [&] { b = cli::verify_identity(id, grid, par); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i) same = a[i].oracle_value == b[i].oracle_value;
    row(id.id.c_str(), ts, tp, same);
    total_s += ts;
    total_p += tp;
    all_same = all_same && same;
  }
  row("verify all", total_s, total_p, all_same);
  return all_same ? 0 : 1;
}
