#pragma once

// Special functions required by the kernel formulas: the sine integral
// Si, Bessel functions J_nu for nu in {0, 1/2, 1, 3/2}, and the Bessel
// integral Ji0. Each carries an accuracy contract (AccuracySpec) that the
// test suite checks against independent quadrature/series oracles.
//
// All functions are pure and thread-safe. None of them call the adaptive
// quadrature oracle; oracle_quadrature exists for tests and reference
// computations only.

#include <functional>

#include "nsgf/quadrature.hpp"

namespace nsgf::specfun {

/// Accuracy contract of a shipped function on a closed interval.
struct AccuracySpec {
  double max_relative_error;
  double domain_lo;
  double domain_hi;
};

enum class Function { sine_integral, bessel_j0, bessel_j1, bessel_integral_ji0 };

/// The shipped contract: relative error <= 1e-12 against the oracle on
/// the stated domain.
AccuracySpec accuracy(Function f);

/// Si(x) = integral of sin(q)/q over (0, x), for x >= 0.
double sine_integral(double x);

/// J_nu(x) for nu in {0, 1/2, 1, 3/2}, x >= 0. Other orders are rejected
/// with std::domain_error.
double bessel_j(double nu, double x);

/// Ji0(x) = integral of (1 - J0(q))/q over (0, x), for x >= 0.
double bessel_integral_ji0(double x);

/// Adaptive Gauss-Kronrod (G7,K15) quadrature with interval bisection and
/// absolute tolerance `tol`. Throws quad::ConvergenceError (carrying the
/// best estimate and its error bound) if the subdivision budget runs out.
double oracle_quadrature(const std::function<double(double)>& integrand, double a, double b,
                         double tol);

namespace detail {

/// 1 - J0(x) evaluated without cancellation (double-double internally).
double one_minus_j0(double x);

/// (Si(x) - sin x) evaluated without cancellation for small/moderate x.
double si_minus_sin(double x);

/// (sin x / x - cos x) evaluated without cancellation.
double sinx_over_x_minus_cosx(double x);

}  // namespace detail

}  // namespace nsgf::specfun
