#include <doctest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "umbra/cli.hpp"
#include "umbra/closedforms.hpp"
#include "umbra/oracle.hpp"

using namespace umbra;
using namespace umbra::closedforms;
using std::numbers::pi;

namespace {

double rel(complex a, complex b) { return std::abs(a - b) / std::abs(b); }

complex fresnel_oracle(double nu, double alpha, double beta, double tol) {
  const auto q = oracle::integrate_oscillatory_gaussian(
      [nu, alpha](double x) -> complex { return x * std::cyl_bessel_j(2.0 * nu, alpha * x); }, beta, tol);
  REQUIRE(q.converged);
  return q.value;
}

}  // namespace

TEST_CASE("fresnel_bessel: order zero") {
  const complex v = fresnel_bessel(0.0, 1.0, 1.0);
  CHECK(v.real() == doctest::Approx(0.12370197).epsilon(1e-7));
  CHECK(v.imag() == doctest::Approx(0.48445621).epsilon(1e-7));
  for (auto [a, b] : {std::pair{1.0, 1.0}, {0.5, 2.0}, {2.0, 5.0}, {0.5, 1.0}, {1.0, 2.0}}) {
    const complex direct = complex(0.0, 1.0 / (2.0 * b)) * std::exp(complex(0.0, -a * a / (4.0 * b)));
    CHECK(rel(fresnel_bessel(0.0, a, b), direct) <= 1e-12);
    CHECK(rel(fresnel_bessel_order0(a, b), direct) <= 1e-15);
    CHECK(rel(fresnel_bessel(0.0, a, b, specfun::BnuMethod::bessel_closed_form), direct) <= 1e-12);
  }
  CHECK_THROWS_AS(fresnel_bessel(0.0, 2.0, 1.0), DomainError);
  CHECK_THROWS_AS(fresnel_bessel(-0.5, 1.0, 1.0), DomainError);
}

TEST_CASE("fresnel_bessel: against the regularized oracle") {
  CHECK(rel(fresnel_bessel(0.5, 1.0, 2.0), fresnel_oracle(0.5, 1.0, 2.0, 1e-8)) <= 1e-6);
  CHECK(rel(fresnel_bessel(1.0, 1.0, 1.0), fresnel_oracle(1.0, 1.0, 1.0, 1e-8)) <= 1e-6);
  CHECK(rel(fresnel_bessel(0.0, 1.0, 1.0), fresnel_oracle(0.0, 1.0, 1.0, 1e-8)) <= 1e-6);
}

TEST_CASE("fresnel_bessel: continuity as nu -> 0") {
  const complex limit = fresnel_bessel_order0(1.0, 1.0);
  double prev = INFINITY;
  complex last = fresnel_bessel(0.1, 1.0, 1.0);
  for (double nu : {0.01, 0.001}) {
    const complex v = fresnel_bessel(nu, 1.0, 1.0);
    const double step = std::abs(v - last);
    CHECK(step < prev);
    prev = step;
    last = v;
  }
  // the approach is linear in nu: 100x smaller nu, roughly 100x closer
  CHECK(std::abs(last - limit) < 2e-2 * std::abs(fresnel_bessel(0.1, 1.0, 1.0) - limit));
}

TEST_CASE("struve integrals") {
  CHECK(struve_halfline_integral(-0.5, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(struve_halfline_integral(-0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(struve_halfline_integral(-1.0, 3.0) == 0.0);
  CHECK(struve_halfline_integral(-1.5, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK_THROWS_AS(struve_halfline_integral(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(struve_halfline_integral(-2.0, 1.0), DomainError);
  CHECK_THROWS_AS(struve_halfline_integral(-0.5, 0.0), DomainError);

  CHECK(struve_moment_integral(0.0) == doctest::Approx(pi).epsilon(1e-15));
  CHECK(struve_moment_integral(0.5) == doctest::Approx(std::sqrt(2.0 * pi)).epsilon(1e-14));
  CHECK(struve_moment_integral(1.0) == doctest::Approx(pi / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(struve_moment_integral(-0.5), DomainError);
}

TEST_CASE("generating function: both methods") {
  CHECK(bessel_generating_function(1.0, 0.0, 2, GenMethod::direct) ==
        doctest::Approx(std::cyl_bessel_j(0.0, 2.0)).epsilon(1e-14));
  CHECK(bessel_generating_function(0.0, 0.7, 3, GenMethod::direct) == 1.0);
  for (int m : {2, 3})
    for (double x : {0.25, 0.5, 1.0, 2.0})
      for (double t : {-1.0, -0.5, 0.5, 1.0}) {
        const double d = bessel_generating_function(x, t, m, GenMethod::direct);
        const double h = bessel_generating_function(x, t, m, GenMethod::tricomi);
        CHECK(std::abs(d - h) <= 1e-8 * std::abs(d));
      }
}

TEST_CASE("bessel_gauss_dilation") {
  CHECK(bessel_gauss_dilation(1, 0.0) == 0.0);
  CHECK_THROWS_AS(bessel_gauss_dilation(0, 1.0), DomainError);
  for (auto [n, x] : {std::pair{1, 1.0}, {2, 2.0}, {3, 4.0}}) {
    const auto q = oracle::integrate_real_line(
        [n = n, x = x](double t) -> complex { return std::cyl_bessel_j(double(n), x * std::exp(-t * t)); }, 1e-12);
    REQUIRE(q.converged);
    CHECK(rel(bessel_gauss_dilation(n, x), q.value) <= 1e-8);
  }
}

TEST_CASE("lorentz_gauss_integral: methods and oracle") {
  using M = LorentzMethod;
  CHECK(lorentz_gauss_integral(0.0) == doctest::Approx(pi / 2.0).epsilon(1e-15));
  for (double x : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    const double h = lorentz_gauss_integral(x, M::hypergeometric);
    CHECK(std::abs(lorentz_gauss_integral(x, M::series) - h) <= 1e-9 * h);
    CHECK(std::abs(lorentz_gauss_integral(x, M::multiplier) - h) <= 1e-9 * h);
    const auto q = oracle::integrate_real_line(
        [x](double t) -> complex {
          const double w = 1.0 / (1.0 + t * t);
          return std::exp(-x * x * w * w) * w * w;
        },
        1e-12);
    REQUIRE(q.converged);
    CHECK(std::abs(h - q.value.real()) <= 1e-8 * h);
  }
}

TEST_CASE("lorentz_gauss_integral: literal (2k+2) denominator is wrong") {
  const double literal = lorentz_gauss_integral(0.0, LorentzMethod::paper_literal);
  CHECK(literal == doctest::Approx(pi / 4.0).epsilon(1e-15));
  CHECK(std::abs(literal - pi / 2.0) > 0.5);
  CHECK(lorentz_gauss_integral(0.0, LorentzMethod::series) == doctest::Approx(pi / 2.0).epsilon(1e-15));
}

TEST_CASE("catalog") {
  const auto& cat = catalog();
  REQUIRE(cat.size() >= 12);
  std::set<std::string> ids;
  for (const auto& d : cat) {
    CHECK(ids.insert(d.id).second);
    CHECK_FALSE(d.domain.empty());
    CHECK_FALSE(d.equation.empty());
    CHECK(d.default_tol > 0.0);
    CHECK(find_identity(d.id) == &d);
    // every default grid point lies in the domain
    for (const auto& p : cli::GridSpec::parse(d.default_grid).points()) {
      const auto why = d.reject(p);
      CHECK_MESSAGE(!why, d.id << ": " << why.value_or(""));
    }
  }
  CHECK(find_identity("eq08_fresnel_bessel") != nullptr);
  CHECK(find_identity("eq12_struve_halfline") != nullptr);
  CHECK(find_identity("nope") == nullptr);

  const auto* f = find_identity("eq07_fresnel_bessel");
  CHECK(f->reject({{"nu", 0.5}, {"alpha", 3.0}, {"beta", 1.0}}).has_value());
  CHECK(f->reject({{"nu", 0.5}, {"alpha", 1.0}}).has_value());
  CHECK(f->reject({{"nu", 0.5}, {"alpha", 1.0}, {"beta", 1.0}, {"gamma", 2.0}}).has_value());
  CHECK_FALSE(f->reject({{"nu", 0.5}, {"alpha", 1.0}, {"beta", 1.0}}).has_value());
  const auto* s = find_identity("eq12_struve_halfline");
  CHECK(s->reject({{"nu", 0.5}, {"b", 1.0}}).has_value());
}
