#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "nsgf/constants.hpp"
#include "nsgf/quadrature.hpp"
#include "nsgf/specfun.hpp"
#include "oracles.hpp"

using namespace nsgf;
using nsgf_test::j_oracle;
using nsgf_test::ji0_oracle;
using nsgf_test::si_oracle;

namespace {
double rel_err(double got, long double want) {
  return static_cast<double>(std::abs(static_cast<long double>(got) - want) /
                             std::max<long double>(std::abs(want), 1e-300L));
}
}  // namespace

TEST_CASE("oracle_quadrature matches its pinned examples") {
  CHECK(specfun::oracle_quadrature([](double) { return 0.0; }, 0.0, 1.0, 1e-15) == 0.0);
  CHECK(specfun::oracle_quadrature([](double) { return 1.0; }, 0.0, 2.0, 1e-15) ==
        doctest::Approx(2.0).epsilon(1e-15));
  const double si1 = specfun::oracle_quadrature(
      [](double q) { return q == 0.0 ? 1.0 : std::sin(q) / q; }, 0.0, 1.0, 1e-15);
  CHECK(std::abs(si1 - 0.946083070367183) < 3e-15);
}

TEST_CASE("oracle_quadrature rejects bad input") {
  CHECK_THROWS_AS(specfun::oracle_quadrature([](double) { return 1.0; }, 1.0, 0.0, 1e-12),
                  std::domain_error);
  CHECK_THROWS_AS(specfun::oracle_quadrature([](double) { return 1.0; }, 0.0, 1.0, 0.0),
                  std::domain_error);
  CHECK_THROWS_AS(
      specfun::oracle_quadrature([](double q) { return q < 0.5 ? 1.0 : std::nan(""); }, 0.0,
                                 1.0, 1e-12),
      std::domain_error);
}

TEST_CASE("quadrature reports convergence failure with its best estimate") {
  bool threw = false;
  try {
    quad::adaptive_gk15<double>([](double q) { return std::sin(300.0 * q * q); }, 0.0, 10.0,
                                1e-14, 8);
  } catch (const quad::ConvergenceError& e) {
    threw = true;
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.error_bound > 0.0);
  }
  CHECK(threw);
}

TEST_CASE("sine integral examples") {
  CHECK(specfun::sine_integral(0.0) == 0.0);
  CHECK(std::abs(specfun::sine_integral(1.0) - 0.946083070367183) < 2e-15);
  CHECK(std::abs(specfun::sine_integral(1000.0) - pi / 2) < 2e-3);
  CHECK_THROWS_AS(specfun::sine_integral(-1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::sine_integral(std::nan("")), std::domain_error);
}

TEST_CASE("sine integral is nondecreasing on [0, pi]") {
  double prev = -1.0;
  for (int i = 0; i <= 2000; ++i) {
    const double x = pi * i / 2000.0;
    const double v = specfun::sine_integral(x);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("sine integral envelope for large arguments") {
  for (double x = 10.0; x <= 1000.0; x *= 1.37)
    CHECK(std::abs(specfun::sine_integral(x) - pi / 2) <= 2.0 / x);
}

TEST_CASE("sine integral agrees with the oracle across its branch seam") {
  for (double x : {3.9999, 4.0001, 3.0, 5.0}) {
    CHECK(rel_err(specfun::sine_integral(x), si_oracle(x)) < 1e-13);
  }
}

TEST_CASE("bessel_j trivial values and order validation") {
  CHECK(specfun::bessel_j(0.0, 0.0) == 1.0);
  CHECK(specfun::bessel_j(1.0, 0.0) == 0.0);
  CHECK(specfun::bessel_j(0.5, 0.0) == 0.0);
  CHECK(specfun::bessel_j(1.5, 0.0) == 0.0);
  CHECK_THROWS_AS(specfun::bessel_j(2.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_j(0.25, 1.0), std::domain_error);
  CHECK_THROWS_AS(specfun::bessel_j(0.0, -1.0), std::domain_error);
}

TEST_CASE("first J0 root from oracle bisection") {
  long double lo = 2.0L, hi = 3.0L;
  for (int i = 0; i < 90; ++i) {
    const long double mid = (lo + hi) / 2;
    if (j_oracle(0, static_cast<double>(mid)) > 0)
      lo = mid;
    else
      hi = mid;
  }
  const double root = static_cast<double>((lo + hi) / 2);
  CHECK(std::abs(root - 2.404825557695773) < 1e-12);
  CHECK(std::abs(specfun::bessel_j(0.0, root)) < 1e-12);
}

TEST_CASE("half-integer orders: closed forms and the recurrence") {
  for (double x : {1e-8, 1e-3, 0.3, 0.5001, 2.0, 14.5, 300.0}) {
    const double jm = std::sqrt(2.0 / (pi * x)) * std::cos(x);  // J_{-1/2}
    const double jh = specfun::bessel_j(0.5, x);
    const double j3 = specfun::bessel_j(1.5, x);
    // J_{3/2} = J_{1/2}/x - J_{-1/2}
    const double envelope = std::sqrt(2.0 / (pi * x));
    CHECK(std::abs(j3 - (jh / x - jm)) < 1e-12 * envelope);
  }
  CHECK(std::abs(specfun::bessel_j(0.5, pi / 2) -
                 std::sqrt(2.0 / (pi * pi / 2))) < 1e-14);
}

TEST_CASE("Ji0 examples") {
  CHECK(specfun::bessel_integral_ji0(0.0) == 0.0);
  CHECK(std::abs(specfun::bessel_integral_ji0(1e-4) - 1.25e-9) < 0.01 * 1.25e-9);
  const double ref10 = specfun::oracle_quadrature(
      [](double q) { return q == 0.0 ? 0.0 : specfun::detail::one_minus_j0(q) / q; }, 0.0,
      10.0, 1e-14);
  CHECK(std::abs(specfun::bessel_integral_ji0(10.0) - ref10) < 1e-13);
  CHECK_THROWS_AS(specfun::bessel_integral_ji0(-0.5), std::domain_error);
}

TEST_CASE("Ji0 approaches ln x + gamma - ln 2") {
  for (double x : {50.0, 100.0, 400.0}) {
    const double ji = static_cast<double>(ji0_oracle(x));
    const double asym = std::log(x) + euler_gamma - std::log(2.0);
    CHECK(std::abs(ji - asym) <= 0.3 / std::sqrt(x));
    CHECK(std::abs(specfun::bessel_integral_ji0(x) - asym) <= 0.3 / std::sqrt(x));
  }
}

TEST_CASE("Ji0 branch seams agree with the oracle to 1e-13") {
  for (double x : {51.9, 52.1, 51.999999, 52.000001}) {
    CHECK(rel_err(specfun::bessel_integral_ji0(x), ji0_oracle(x)) < 1e-13);
  }
}

TEST_CASE("accuracy contracts are shipped and within spec") {
  for (auto f : {specfun::Function::sine_integral, specfun::Function::bessel_j0,
                 specfun::Function::bessel_j1, specfun::Function::bessel_integral_ji0}) {
    const auto spec = specfun::accuracy(f);
    CHECK(spec.max_relative_error > 0.0);
    CHECK(spec.max_relative_error <= 1e-12);
    CHECK(spec.domain_lo < spec.domain_hi);
  }
}

TEST_CASE("quick oracle sweeps at 1e-12") {
  // Thinner version of the acceptance sweep; the full 1e4-point run lives
  // in the acceptance suite.
  const auto pts = nsgf_test::log_spaced(1e-8, 1e3, 500);
  double worst = 0.0;
  for (double x : pts) {
    worst = std::max(worst, rel_err(specfun::sine_integral(x), si_oracle(x)));
    worst = std::max(worst, rel_err(specfun::bessel_j(0.0, x), j_oracle(0, x)));
    worst = std::max(worst, rel_err(specfun::bessel_j(1.0, x), j_oracle(1, x)));
  }
  const auto ji_ref = nsgf_test::ji0_oracle_sweep(pts);
  for (std::size_t i = 0; i < pts.size(); ++i)
    worst = std::max(worst, rel_err(specfun::bessel_integral_ji0(pts[i]), ji_ref[i]));
  CHECK(worst < 1e-12);
}
