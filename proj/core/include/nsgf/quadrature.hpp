#pragma once

// Adaptive Gauss-Kronrod (G7,K15) quadrature with interval bisection.
//
// The abscissae and weights are not transcribed from tables: they are
// computed once at first use, in long double, from the defining algebra
// (Legendre P7 roots, the Stieltjes extension polynomial E8, and moment
// exactness systems), then verified by integrating Legendre polynomials
// up to the rule's exactness degree. A failed verification throws at
// startup, so a wrong derivation cannot silently produce bad integrals.

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nsgf::quad {

/// Thrown when the subdivision budget is exhausted before the requested
/// tolerance is met. Carries the best estimate and its error bound.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(double best, double bound)
      : std::runtime_error("quadrature failed to converge within the subdivision budget"),
        best_estimate(best),
        error_bound(bound) {}
  double best_estimate;
  double error_bound;
};

/// Nonnegative half of the symmetric 15-point Kronrod rule on [-1,1].
/// xs[0] == 0; gauss_w[i] == 0 where xs[i] is not a Gauss-7 node.
template <class Real>
struct Gk15Rule {
  std::array<Real, 8> xs;
  std::array<Real, 8> kronrod_w;
  std::array<Real, 8> gauss_w;
};

const Gk15Rule<long double>& gk15_rule_ld();

template <class Real>
const Gk15Rule<Real>& gk15_rule();

template <>
inline const Gk15Rule<long double>& gk15_rule<long double>() {
  return gk15_rule_ld();
}

template <>
inline const Gk15Rule<double>& gk15_rule<double>() {
  static const Gk15Rule<double> rule = [] {
    const Gk15Rule<long double>& ld = gk15_rule_ld();
    Gk15Rule<double> r;
    for (int i = 0; i < 8; ++i) {
      r.xs[i] = static_cast<double>(ld.xs[i]);
      r.kronrod_w[i] = static_cast<double>(ld.kronrod_w[i]);
      r.gauss_w[i] = static_cast<double>(ld.gauss_w[i]);
    }
    return r;
  }();
  return rule;
}

template <class Real>
struct PanelEstimate {
  Real kronrod;
  Real abs_magnitude;  // K15 applied to |f|; sets the rounding floor
  Real discrepancy;    // |K15 - G7|
};

template <class Real, class F>
PanelEstimate<Real> gk15_panel(F&& f, Real a, Real b) {
  const Gk15Rule<Real>& rule = gk15_rule<Real>();
  const Real half = (b - a) / 2;
  const Real mid = (a + b) / 2;
  Real k = 0, g = 0, kabs = 0;
  {
    Real fc = f(mid);
    k += rule.kronrod_w[0] * fc;
    kabs += rule.kronrod_w[0] * std::abs(fc);
    g += rule.gauss_w[0] * fc;
  }
  for (int i = 1; i < 8; ++i) {
    Real fp = f(mid + half * rule.xs[i]);
    Real fm = f(mid - half * rule.xs[i]);
    k += rule.kronrod_w[i] * (fp + fm);
    kabs += rule.kronrod_w[i] * (std::abs(fp) + std::abs(fm));
    g += rule.gauss_w[i] * (fp + fm);
  }
  k *= half;
  g *= half;
  kabs *= half;
  Real d = k - g;
  if (d < 0) d = -d;
  return {k, kabs, d};
}

/// Adaptive bisection driver. `tol` is an absolute error target.
/// `integrand_noise_rel` describes the integrand's own relative accuracy
/// (e.g. 3e-17 when the integrand is computed in double); the driver will
/// not try to resolve panels below that noise floor.
/// Throws ConvergenceError when `max_panels` is exhausted.
template <class Real, class F>
Real adaptive_gk15(F&& f, Real a, Real b, Real tol, long max_panels = 200000,
                   Real integrand_noise_rel = Real(0)) {
  if (!(a <= b)) throw std::domain_error("adaptive_gk15: requires a <= b");
  if (a == b) return Real(0);
  struct Panel {
    Real a, b;
  };
  // Explicit stack, rightmost segment on top: deterministic left-to-right
  // accumulation order.
  std::array<Panel, 128> stack;
  int top = 0;
  stack[top++] = {a, b};
  Real total = 0, total_comp = 0;  // Kahan
  Real err_sum = 0;
  const Real whole = b - a;
  long used = 0;
  bool exhausted = false;
  const Real min_width = whole * std::numeric_limits<Real>::epsilon() * 8;
  while (top > 0) {
    Panel p = stack[--top];
    auto est = gk15_panel<Real>(f, p.a, p.b);
    ++used;
    if (!std::isfinite(static_cast<double>(est.kronrod)))
      throw std::domain_error("adaptive_gk15: integrand produced a non-finite value");
    Real local_tol = tol * ((p.b - p.a) / whole);
    const Real floor =
        std::max(50 * std::numeric_limits<Real>::epsilon(), integrand_noise_rel) *
        est.abs_magnitude;
    bool accept = est.discrepancy <= local_tol || est.discrepancy <= floor ||
                  (p.b - p.a) <= min_width || top >= 126;
    if (!accept && used >= max_panels) {
      accept = true;
      exhausted = true;
    }
    if (accept) {
      Real y = est.kronrod - total_comp;
      Real t = total + y;
      total_comp = (t - total) - y;
      total = t;
      err_sum += est.discrepancy;
    } else {
      Real mid = (p.a + p.b) / 2;
      stack[top++] = {mid, p.b};
      stack[top++] = {p.a, mid};
    }
  }
  if (exhausted && err_sum > tol)
    throw ConvergenceError(static_cast<double>(total), static_cast<double>(err_sum));
  return total;
}

}  // namespace nsgf::quad
