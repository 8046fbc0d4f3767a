#include <doctest.h>

#include <cmath>
#include <numbers>

#include "umbra/oracle.hpp"
#include "umbra/reference.hpp"
#include "umbra/specfun.hpp"

using namespace umbra;
using namespace umbra::oracle;
using std::numbers::pi;

namespace {

const complex I(0.0, 1.0);

struct Fixture {
  const char* name;
  std::function<QuadratureResult(double tol)> run;
  complex exact;
};

std::vector<Fixture> fixtures() {
  return {
      {"u on [0,1]", [](double tol) { return integrate_finite([](double u) -> complex { return u; }, 0, 1, tol); }, 0.5},
      {"u^-1/2 on [0,1]",
       [](double tol) { return integrate_finite([](double u) -> complex { return 1.0 / std::sqrt(u); }, 0, 1, tol); },
       2.0},
      {"beta(2,3)",
       [](double tol) {
         return integrate_finite([](double u) -> complex { return u * (1 - u) * (1 - u); }, 0, 1, tol);
       },
       1.0 / 12.0},
      {"e^-x", [](double tol) { return integrate_half_line([](double x) -> complex { return std::exp(-x); }, tol); },
       1.0},
      {"x^-1/2/(1+x)",
       [](double tol) {
         return integrate_half_line([](double x) -> complex { return 1.0 / (std::sqrt(x) * (1.0 + x)); }, tol);
       },
       pi},
      {"e^-t^2", [](double tol) { return integrate_real_line([](double t) -> complex { return std::exp(-t * t); }, tol); },
       std::sqrt(pi)},
      {"(1+t^2)^-2",
       [](double tol) {
         return integrate_real_line([](double t) -> complex { return 1.0 / ((1 + t * t) * (1 + t * t)); }, tol);
       },
       pi / 2.0},
      {"(1+t^2)^-3",
       [](double tol) {
         return integrate_real_line([](double t) -> complex { return std::pow(1 + t * t, -3.0); }, tol);
       },
       3.0 * pi / 8.0},
      {"x e^{ix^2}",
       [](double tol) { return integrate_oscillatory_gaussian([](double x) -> complex { return x; }, 1.0, tol); },
       I / 2.0},
      {"x e^{2ix^2}",
       [](double tol) { return integrate_oscillatory_gaussian([](double x) -> complex { return x; }, 2.0, tol); },
       I / 4.0},
      {"x J0(x) e^{ix^2}",
       [](double tol) {
         return integrate_oscillatory_gaussian([](double x) -> complex { return x * std::cyl_bessel_j(0.0, x); }, 1.0,
                                               tol);
       },
       I / 2.0 * std::exp(-I / 4.0)},
  };
}

}  // namespace

TEST_CASE("fixtures reach their exact values") {
  for (const auto& f : fixtures()) {
    CAPTURE(f.name);
    const auto r = f.run(1e-9);
    CHECK(r.converged);
    CHECK(r.abs_error_estimate <= 1e-9);
    CHECK(std::abs(r.value - f.exact) <= 1e-8 * std::abs(f.exact));
    CHECK(r.evaluations > 0);
  }
}

TEST_CASE("error estimates are honest") {
  int total = 0, honest = 0;
  for (const auto& f : fixtures())
    for (double tol : {1e-5, 1e-7, 1e-9, 1e-11}) {
      const auto r = f.run(tol);
      if (!r.converged) continue;
      ++total;
      // a few ulps of slack for estimates that are exactly zero
      const double err = std::abs(r.value - f.exact);
      if (err <= 3.0 * r.abs_error_estimate + 8e-16 * std::abs(f.exact)) ++honest;
      else MESSAGE(f.name << " tol " << tol << ": error " << err << " estimate " << r.abs_error_estimate);
    }
  CHECK(total >= 40);
  CHECK(honest >= 0.95 * total);
}

TEST_CASE("integrate_finite edge cases") {
  CHECK_THROWS_AS(integrate_finite([](double) -> complex { return 1.0; }, 1.0, 0.0, 1e-8), DomainError);
  const auto z = integrate_finite([](double) -> complex { return 1.0; }, 2.0, 2.0, 1e-8);
  CHECK(z.converged);
  CHECK(z.value == 0.0);
  // budget exhaustion is reported, not hidden
  QuadratureOptions tight{1e-15, 1e-15, 8};
  const auto r = integrate_finite([](double x) -> complex { return std::sin(200.0 * x); }, 0.0, 10.0, tight);
  CHECK_FALSE(r.converged);
  CHECK_FALSE(r.note.empty());
  CHECK_THROWS_AS(r.require(), OracleError);
}

TEST_CASE("substitution invariance") {
  const std::function<complex(double)> even[] = {
      [](double t) -> complex { return std::exp(-t * t); },
      [](double t) -> complex { return 1.0 / std::cosh(t); },
      [](double t) -> complex { return std::pow(1.0 + t * t, -1.5); },
  };
  for (const auto& f : even) {
    const auto whole = integrate_real_line(f, 1e-11);
    const auto half = integrate_half_line(f, 1e-11);
    CHECK(std::abs(whole.value - 2.0 * half.value) <=
          whole.abs_error_estimate + 2.0 * half.abs_error_estimate + 1e-14);
  }
}

TEST_CASE("epsilon ladder") {
  for (double beta : {1.0, 2.0}) {
    const auto r = integrate_oscillatory_gaussian([](double x) -> complex { return x; }, beta, 1e-9);
    REQUIRE(r.trace.has_value());
    const auto& t = *r.trace;
    CHECK(t.epsilons.size() >= 5);
    CHECK(t.epsilons.size() == t.values.size());
    for (std::size_t i = 1; i < t.epsilons.size(); ++i) CHECK(t.epsilons[i] < t.epsilons[i - 1]);
    const auto& res = t.residuals;
    REQUIRE(res.size() >= 3);
    CHECK(res[res.size() - 1] < res[res.size() - 2]);
    CHECK(res[res.size() - 2] < res[res.size() - 3]);
    CHECK(t.residual == res.back());
  }

  // polynomial data in eps is reproduced exactly
  const std::vector<double> eps{0.4, 0.2, 0.1, 0.05};
  std::vector<complex> v;
  for (double e : eps) v.push_back(1.0 + 2.0 * e - 3.0 * e * e);
  const auto t = extrapolate_to_zero(eps, v);
  CHECK(std::abs(t.extrapolated - 1.0) < 1e-14);
  CHECK(t.residual < 1e-13);

  LadderOptions bad;
  bad.epsilons = {0.1, 0.2};
  CHECK_THROWS_AS(integrate_oscillatory_gaussian([](double x) -> complex { return x; }, 1.0, 1e-6, bad),
                  DomainError);
  bad.epsilons = {0.1};
  CHECK_THROWS_AS(integrate_oscillatory_gaussian([](double x) -> complex { return x; }, 1.0, 1e-6, bad),
                  DomainError);
}

TEST_CASE("damped half line: Struve H_{-1/2}") {
  HalfLineOptions o;
  o.damping = Damping::exp_extrapolated;
  const auto r = integrate_half_line([](double x) -> complex { return reference::struve_h(-0.5, x); }, 1e-7, o);
  CHECK(r.converged);
  CHECK(r.trace.has_value());
  CHECK(std::abs(r.value - 1.0) < 1e-6);
}

TEST_CASE("panels: serial and parallel agree bit for bit") {
  std::vector<double> edges;
  for (int i = 0; i <= 64; ++i) edges.push_back(0.5 * i);
  const Integrand f = [](double x) -> complex { return std::exp(complex(-0.01 * x, x * x / 10.0)); };
  const auto opts = QuadratureOptions::from_tol(1e-12);
  const auto s = integrate_panels(f, edges, opts, Execution::serial);
  const auto p = integrate_panels(f, edges, opts, Execution::parallel);
  CHECK(s.value == p.value);
  CHECK(s.evaluations == p.evaluations);
  CHECK(s.converged);
}

TEST_CASE("series_sum") {
  const auto g = series_sum([](int k) -> complex { return std::ldexp(1.0, -k); });
  CHECK(std::abs(g.value - 2.0) < 1e-15);
  CHECK(g.tail.converged);
  double t = 1.0;
  const auto e = series_sum([&t](int k) -> complex {
    if (k > 0) t *= -1.0 / k;
    return t;
  });
  CHECK(std::abs(e.value - std::exp(-1.0)) < 2e-16);
  // int_R J_1(e^{-t^2}) dt as its series: sqrt(pi) sum (-1)^k (1/2)^{2k+1} / (k!(k+1)! sqrt(2k+1))
  const auto b = series_sum([](int k) -> complex {
    return std::sqrt(pi) * (k % 2 ? -1.0 : 1.0) * std::pow(0.5, 2 * k + 1) /
           (std::tgamma(k + 1.0) * std::tgamma(k + 2.0) * std::sqrt(2.0 * k + 1.0));
  });
  CHECK(b.tail.converged);
  CHECK(std::isfinite(b.value.real()));
  CHECK_THROWS_AS(series_sum([](int) -> complex { return 1.0; }, 1e-16, 100), ConvergenceError);
}

TEST_CASE("reference functions") {
  for (double nu : {0.0, 0.5, 1.0, 2.5})
    for (double x : {0.5, 3.0, 20.0}) CHECK(std::abs(reference::bessel_y(nu, x) - std::cyl_neumann(nu, x)) < 1e-13);
  CHECK(std::abs(reference::bessel_y(-0.5, 2.0) - std::sqrt(2.0 / (pi * 2.0)) * std::sin(2.0)) < 1e-14);
  CHECK(std::abs(reference::bessel_y(-1.0, 2.0) + std::cyl_neumann(1.0, 2.0)) < 1e-14);

  for (double nu : {-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0})
    for (double x : {0.5, 2.0, 6.0})
      CHECK(std::abs(reference::struve_h(nu, x) - specfun::struve_h(nu, x)) < 1e-12);
  // the series and the Y + K form meet at the switch
  for (double nu : {-1.0, 0.0, 0.5}) {
    const double a = reference::struve_h(nu, reference::kStruveSeriesLimit);
    const double b = reference::bessel_y(nu, reference::kStruveSeriesLimit) +
                     reference::struve_k(nu, reference::kStruveSeriesLimit);
    CHECK(std::abs(a - b) < 1e-11);
  }
  // K = H - Y on both sides of the switch to the asymptotic sum (mpmath, 30 digits)
  const double kvals[][3] = {{-1, 3, -0.0588153720270690393},  {0, 3, 0.19745613880160801601},
                             {1, 3, 0.69543514439465038238},   {-1, 20, -0.0015800262859828326691},
                             {0, 20, 0.031753101271939619735}, {1, 20, 0.63819979865356417574},
                             {-1, 40, -0.00039714816573274154609}, {0, 40, 0.01590560222940362302},
                             {1, 40, 0.63701692053331408462},  {-1, 1000, -6.3661786253691112748e-7},
                             {0, 1000, 0.00063661913575353841021}, {1, 1000, 0.63662040898544387999}};
  for (const auto& k : kvals)
    CHECK(std::abs(reference::struve_k(k[0], k[1]) - k[2]) <= 1e-13 * std::abs(k[2]) + 1e-15);
  CHECK(reference::struve_k(-1.5, 3.0) == 0.0);
  CHECK(std::abs(reference::struve_h(0.5, 30.0) - std::sqrt(2.0 / (pi * 30.0)) * (1.0 - std::cos(30.0))) < 1e-13);

  for (double nu : {0.0, 0.5, 1.0, 1.5, 2.0})
    for (double x : {-4.0, -0.5, 0.5, 4.0})
      CHECK(std::abs(reference::b_nu(nu, x) - specfun::b_nu(nu, x)) <= 1e-12 * std::abs(specfun::b_nu(nu, x)));
  for (int m : {2, 3, 4})
    for (int k = 0; k < m; ++k)
      for (double x : {0.3, 2.0}) CHECK(std::abs(reference::pseudo_trig(k, m, x) - specfun::pseudo_trig(k, m, x)) < 1e-14);
  CHECK(std::abs(reference::bessel_i(-1.5, 2.0) - specfun::bessel_i(-1.5, 2.0)) < 1e-13);
}

TEST_CASE("struve half-line oracle") {
  const auto r = reference::struve_halfline(-0.5, 2.0, 0.0, 1e-7, Execution::serial);
  CHECK(r.converged);
  CHECK(std::abs(r.value - 0.5) < 1e-6);
  const auto m = reference::struve_halfline(0.0, 1.0, 1.0, 1e-8, Execution::serial);
  CHECK(m.converged);
  CHECK(std::abs(2.0 * m.value - pi) < 1e-7);
}
