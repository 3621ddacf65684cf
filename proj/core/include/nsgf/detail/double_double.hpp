#pragma once

// Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
// Used where plain doubles lose too many digits to cancellation: the
// power-series regions of the Bessel evaluations, the large-argument
// phase reduction, and the 1 - J0 differences needed by the 2D kernels.
// Requires IEEE round-to-nearest and no FP contraction (see top-level
// CMakeLists); std::fma is exact regardless of hardware FMA support.

#include <cmath>

namespace nsgf::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  double to_double() const { return hi + lo; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

// Requires |a| >= |b|.
inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  double err = b - (s - a);
  return {s, err};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - dd(q1) * b;
  double q2 = r.hi / b.hi;
  r = r - dd(q2) * b;
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }

inline dd dd_abs(dd a) { return a.hi < 0.0 || (a.hi == 0.0 && a.lo < 0.0) ? -a : a; }

inline dd dd_sqrt(dd a) {
  if (a.hi == 0.0) return {0.0, 0.0};
  double s = std::sqrt(a.hi);
  dd r = (a - dd(s) * dd(s)) / (2.0 * s);
  return quick_two_sum(s, r.to_double());
}

// pi = dd_pi().hi + dd_pi().lo to ~1e-32. The low word is the well-known
// double rounding of pi - (double)pi; verified against sin(M_PI) in tests.
inline dd dd_pi() { return {3.141592653589793116, 1.2246467991473532072e-16}; }
inline dd dd_pi_half() { dd p = dd_pi(); return {p.hi * 0.5, p.lo * 0.5}; }

// sin/cos of a double-double argument via Cody-Waite style reduction
// modulo pi/2 and Taylor evaluation on |x| <= pi/4.
struct dd_sincos_result {
  dd sin, cos;
};

inline dd_sincos_result dd_sincos_reduced(dd x) {
  // |x| <= pi/4 + small
  dd x2 = x * x;
  dd s = x;
  dd term = x;
  for (int k = 1; k <= 16; ++k) {
    term = term * x2 / static_cast<double>(-(2 * k) * (2 * k + 1));
    s = s + term;
    if (std::abs(term.hi) < 1e-35) break;
  }
  dd c(1.0);
  term = dd(1.0);
  for (int k = 1; k <= 16; ++k) {
    term = term * x2 / static_cast<double>(-(2 * k - 1) * (2 * k));
    c = c + term;
    if (std::abs(term.hi) < 1e-35) break;
  }
  return {s, c};
}

inline dd_sincos_result dd_sincos(dd x) {
  long long k = std::llround(x.to_double() / 1.5707963267948966);
  dd red = x - dd_pi_half() * static_cast<double>(k);
  dd_sincos_result r = dd_sincos_reduced(red);
  switch (((k % 4) + 4) % 4) {
    case 0: return r;
    case 1: return {r.cos, -r.sin};
    case 2: return {-r.sin, -r.cos};
    default: return {-r.cos, r.sin};
  }
}

}  // namespace nsgf::detail
