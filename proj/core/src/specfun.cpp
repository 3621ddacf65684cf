#include "nsgf/specfun.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "nsgf/constants.hpp"
#include "nsgf/detail/double_double.hpp"

namespace nsgf::specfun {
namespace {

using nsgf::detail::dd;
using nsgf::detail::dd_pi;
using nsgf::detail::dd_sincos;
using nsgf::detail::dd_sqrt;

void require_nonnegative_finite(double x, const char* who) {
  if (!std::isfinite(x) || x < 0.0)
    throw std::domain_error(std::string(who) + ": argument must be finite and >= 0");
}

// ---------------------------------------------------------------- Si ----

// Power series, adequate for x < 4 (mild cancellation only).
double si_series(double x) {
  const double x2 = x * x;
  double term = x, sum = x;
  for (int k = 0; k < 40; ++k) {
    // a_{k+1}/a_k for Si's series
    term *= -x2 * (2 * k + 1) / ((2.0 * k + 3) * (2 * k + 3) * (2 * k + 2));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// E1(z) by the even continued fraction with the modified Lentz algorithm.
// Converges for z off the negative real axis; used here on z = i x, x >= 4.
std::complex<double> e1_continued_fraction(std::complex<double> z) {
  const double tiny = 1e-290;
  std::complex<double> b = z + 1.0;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= 400; ++i) {
    const double a = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-15) return std::exp(-z) * h;
  }
  throw std::runtime_error("sine_integral: continued fraction failed to converge");
}

double si_large(double x) {
  const std::complex<double> e1 = e1_continued_fraction({0.0, x});
  return nsgf::pi / 2 + e1.imag();
}

// ------------------------------------------------------------ J0, J1 ----

// Series in double-double; stable for x <= 22.
dd j_series_dd(int nu, double x) {
  const dd u = dd(x) * dd(x) / 4.0;
  dd term(1.0), sum(1.0);
  for (int k = 0; k < 60; ++k) {
    const double den = (nu == 0) ? (k + 1.0) * (k + 1.0) : (k + 1.0) * (k + 2.0);
    term = -(term * u) / den;
    sum = sum + term;
    if (std::abs(term.hi) < 1e-34 * std::abs(sum.hi)) break;
  }
  if (nu == 1) sum = sum * dd(x) * 0.5;
  return sum;
}

// Hankel asymptotic expansion evaluated in double-double, x > 22.
// From the Laplace-type integral representation of the Hankel function:
//   J_nu = sqrt(2/(pi x)) (cos(chi) P - sin(chi) Q),
//   chi = x - nu pi/2 - pi/4,
// with t_{m+1} = t_m (mu - (2m+1)^2) / (8 x (m+1)), mu = 4 nu^2,
// P = sum over even m of i^m t_m, Q = sum over odd m of i^(m-1) t_m.
dd j_asymptotic_dd(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  dd t(1.0);
  dd p(1.0), q(0.0);
  double prev = 1.0;
  for (int m = 0; m < 80; ++m) {
    const double num = mu - (2.0 * m + 1) * (2.0 * m + 1);
    t = t * dd(num) / (8.0 * x * (m + 1.0));
    const double mag = std::abs(t.hi);
    if (mag > prev) break;  // asymptotic minimum reached
    const int mm = m + 1;
    if (mm % 2 == 0) {
      // i^mm = (-1)^(mm/2)
      p = (mm / 2) % 2 == 0 ? p + t : p - t;
    } else {
      // i^(mm-1) = (-1)^((mm-1)/2)
      q = ((mm - 1) / 2) % 2 == 0 ? q + t : q - t;
    }
    if (mag < 1e-36) break;
    prev = mag;
  }
  const dd quarter_pi = dd{dd_pi().hi * 0.25, dd_pi().lo * 0.25};
  dd chi = dd(x) - quarter_pi * static_cast<double>(2 * nu + 1);
  const auto sc = dd_sincos(chi);
  const dd amp = dd_sqrt(dd(2.0) / (dd_pi() * dd(x)));
  return amp * (sc.cos * p - sc.sin * q);
}

dd j_integer_dd(int nu, double x) {
  if (x == 0.0) return dd(nu == 0 ? 1.0 : 0.0);
  return x <= 22.0 ? j_series_dd(nu, x) : j_asymptotic_dd(nu, x);
}

double j_half(double x) {
  if (x == 0.0) return 0.0;
  // sqrt(2x/pi) * sin(x)/x, overflow-safe at tiny x
  const double s = (x < 1e-4) ? 1.0 - x * x / 6.0 + x * x * x * x / 120.0 : std::sin(x) / x;
  return std::sqrt(2.0 * x / nsgf::pi) * s;
}

double j_three_halves(double x) {
  if (x == 0.0) return 0.0;
  return std::sqrt(2.0 * x / nsgf::pi) * detail::sinx_over_x_minus_cosx(x) / x;
}

// --------------------------------------------------------------- Ji0 ----

// Ji0 series: sum_{k>=1} (-1)^(k+1) (x/2)^(2k) / (2k (k!)^2), evaluated in
// double-double. Centered-difference tests of the 2D Green's function sit
// right at the double rounding floor, so the evaluation itself must not
// add jitter beyond the final rounding.
double ji0_series_dd(double x) {
  const dd u = dd(x) * dd(x) / 4.0;
  dd term = u * 0.5, sum = term;
  for (int k = 1; k < 220; ++k) {
    // k and (k+1)^3 are exact in double; keep the ratio in dd, a
    // double-rounded factor would contaminate the heavily cancelling sum.
    const double den = (k + 1.0) * (k + 1.0) * (k + 1.0);
    term = -(term * u) * static_cast<double>(k) / den;
    sum = sum + term;
    if (std::abs(term.hi) < 1e-20 * std::abs(sum.hi)) break;
  }
  return sum.to_double();
}

// Ji0(x) = ln x + gamma - ln 2 - T0(x),  T0 = integral of J0(q)/q over (x, inf).
// Repeated integration by parts with (q^{n+1} J_{n+1})' = q^{n+1} J_n gives
//   T0 = -sum_{n>=1} 2^(n-1) (n-1)! J_n(x) / x^n,
// an asymptotic series whose terms are minimal near n = x/2; for x > 52 the
// truncation error sits below 3e-13 relative.
double ji0_asymptotic(double x) {
  double jm1 = j_integer_dd(0, x).to_double();
  double jn = j_integer_dd(1, x).to_double();
  double r = 1.0 / x;  // r_n = 2^(n-1) (n-1)! / x^n at n = 1
  double sum = r * jn;
  double prev_mag = std::abs(r) * std::sqrt(2.0 / (nsgf::pi * x));
  for (int n = 1; n <= 44; ++n) {
    const double next_r = r * (2.0 * n / x);
    const double mag = std::abs(next_r) * std::sqrt(2.0 / (nsgf::pi * x));
    if (mag > prev_mag) break;  // asymptotic minimum
    const double jnext = (2.0 * n / x) * jn - jm1;  // forward recurrence
    jm1 = jn;
    jn = jnext;
    r = next_r;
    sum += r * jn;
    if (mag < 1e-17) break;
    prev_mag = mag;
  }
  return std::log(x) + nsgf::euler_gamma - std::log(2.0) - sum;
}

}  // namespace

AccuracySpec accuracy(Function f) {
  switch (f) {
    case Function::sine_integral:
    case Function::bessel_integral_ji0:
      return {1e-12, 1e-8, 1e3};
    case Function::bessel_j0:
    case Function::bessel_j1:
      return {1e-12, 0.0, 1e3};
  }
  throw std::domain_error("accuracy: unknown function");
}

double sine_integral(double x) {
  require_nonnegative_finite(x, "sine_integral");
  if (x == 0.0) return 0.0;
  return x < 4.0 ? si_series(x) : si_large(x);
}

double bessel_j(double nu, double x) {
  require_nonnegative_finite(x, "bessel_j");
  if (nu == 0.0) return j_integer_dd(0, x).to_double();
  if (nu == 1.0) return j_integer_dd(1, x).to_double();
  if (nu == 0.5) return j_half(x);
  if (nu == 1.5) return j_three_halves(x);
  throw std::domain_error("bessel_j: order must be one of {0, 1/2, 1, 3/2}");
}

double bessel_integral_ji0(double x) {
  require_nonnegative_finite(x, "bessel_integral_ji0");
  if (x == 0.0) return 0.0;
  if (x <= 52.0) return ji0_series_dd(x);
  return ji0_asymptotic(x);
}

double oracle_quadrature(const std::function<double(double)>& integrand, double a, double b,
                         double tol) {
  if (!std::isfinite(a) || !std::isfinite(b) || a > b)
    throw std::domain_error("oracle_quadrature: requires finite a <= b");
  if (!(tol > 0))
    throw std::domain_error("oracle_quadrature: tolerance must be positive");
  return quad::adaptive_gk15<double>(integrand, a, b, tol);
}

namespace detail {

double one_minus_j0(double x) {
  if (x > 22.0) return 1.0 - j_integer_dd(0, x).to_double();
  const dd u = dd(x) * dd(x) / 4.0;
  dd term = u, sum = u;  // k = 1 term of -(J0 - 1)
  for (int k = 1; k < 60; ++k) {
    term = -(term * u) / ((k + 1.0) * (k + 1.0));
    sum = sum + term;
    if (std::abs(term.hi) < 1e-34 * std::abs(sum.hi)) break;
  }
  return sum.to_double();
}

double si_minus_sin(double x) {
  if (x > 8.0) return sine_integral(x) - std::sin(x);
  // sum_{k>=1} (-1)^(k+1) 2k x^(2k+1) / ((2k+1) (2k+1)!)
  const double x2 = x * x;
  double pow = x * x2;      // x^3
  double fact = 6.0;        // 3!
  double sum = 0.0;
  for (int k = 1; k < 30; ++k) {
    const double term = (k % 2 ? 1.0 : -1.0) * 2.0 * k * pow / ((2 * k + 1) * fact);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pow *= x2;
    fact *= (2 * k + 2.0) * (2 * k + 3.0);
  }
  return sum;
}

double sinx_over_x_minus_cosx(double x) {
  if (x > 8.0) return std::sin(x) / x - std::cos(x);
  // sum_{k>=1} (-1)^(k+1) 2k x^(2k) / (2k+1)!
  const double x2 = x * x;
  double pow = x2;
  double fact = 6.0;  // 3!
  double sum = 0.0;
  for (int k = 1; k < 30; ++k) {
    const double term = (k % 2 ? 1.0 : -1.0) * 2.0 * k * pow / fact;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
    pow *= x2;
    fact *= (2 * k + 2.0) * (2 * k + 3.0);
  }
  return sum;
}

}  // namespace detail

}  // namespace nsgf::specfun
