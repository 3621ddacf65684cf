#include "oracles.hpp"

#include <cmath>
#include <complex>

#include "nsgf/quadrature.hpp"
#include "nsgf/specfun.hpp"

namespace nsgf_test {
namespace {

using LD = long double;
constexpr LD kPi = 3.141592653589793238462643383279502884L;

template <class F>
LD quad_ld(F&& f, LD a, LD b, LD tol) {
  return nsgf::quad::adaptive_gk15<LD>(std::forward<F>(f), a, b, tol);
}

}  // namespace

long double si_oracle(double x) {
  if (x == 0.0) return 0.0L;
  const LD xl = x;
  if (x <= 20.0) {
    const LD tol = std::max<LD>(1e-22L, 1e-19L * xl);
    return quad_ld([](LD q) { return q == 0.0L ? LD(1) : std::sin(q) / q; }, 0.0L, xl, tol);
  }
  // f(x) = Int_0^inf e^{-v} / (x (1 + (v/x)^2)) dv,
  // g(x) = Int_0^inf v e^{-v} / (x^2 (1 + (v/x)^2)) dv,
  // Si = pi/2 - f cos - g sin.
  const LD cut = 60.0L;  // e^-60 ~ 8.8e-27
  const LD f = quad_ld([xl](LD v) { return std::exp(-v) / (xl * (1 + (v / xl) * (v / xl))); },
                       0.0L, cut, 1e-21L);
  const LD g = quad_ld(
      [xl](LD v) { return v * std::exp(-v) / (xl * xl * (1 + (v / xl) * (v / xl))); }, 0.0L, cut,
      1e-21L);
  return kPi / 2 - f * std::cos(xl) - g * std::sin(xl);
}

long double j_oracle(int nu, double x) {
  const LD xl = x;
  if (x <= 1.0) {
    // Defining Taylor series in long double; the cosine representation
    // cancels badly for J1 at tiny arguments.
    const LD u = xl * xl / 4;
    LD term = 1.0L, sum = 1.0L;
    for (int k = 0; k < 25; ++k) {
      const LD den = (nu == 0) ? (k + 1.0L) * (k + 1.0L) : (k + 1.0L) * (k + 2.0L);
      term *= -u / den;
      sum += term;
      if (std::abs(term) < 1e-24L * std::abs(sum)) break;
    }
    return nu == 0 ? sum : sum * xl / 2;
  }
  if (x <= 18.0) {
    // (1/pi) Int_0^pi cos(nu t - x sin t) dt
    const LD v = quad_ld([xl, nu](LD t) { return std::cos(nu * t - xl * std::sin(t)); }, 0.0L,
                         kPi, 5e-19L);
    return v / kPi;
  }
  using C = std::complex<LD>;
  const LD gamma_half = std::sqrt(kPi);  // Gamma(1/2)
  const LD gamma_nu_half = (nu == 0) ? gamma_half : gamma_half / 2;  // Gamma(nu + 1/2)
  auto integrand = [xl, nu](LD u) {
    const C base(1.0L, u * u / (2 * xl));
    const C pw = (nu == 0) ? C(1.0L) / std::sqrt(base) : std::sqrt(base);
    const LD weight = std::exp(-u * u) * (nu == 0 ? 1.0L : u * u);
    return weight * pw;
  };
  const LD cut = 9.0L;  // e^-81
  const LD re = quad_ld([&](LD u) { return integrand(u).real(); }, 0.0L, cut, 5e-20L);
  const LD im = quad_ld([&](LD u) { return integrand(u).imag(); }, 0.0L, cut, 5e-20L);
  const LD chi = xl - (2 * nu + 1) * kPi / 4;
  const C phase(std::cos(chi), std::sin(chi));
  const C total = std::sqrt(LD(2) / (kPi * xl)) * phase * C(re, im) * (LD(2) / gamma_nu_half);
  return total.real();
}

namespace {

// (1 - J0(q))/q: long-double series below q = 0.5 (pointwise relative
// accuracy for the tiny-x sweep points), the library's double-double J0
// above. The latter makes the integrand double-precision, hence the
// noise floor handed to the driver; J0 itself is validated against the
// independent j_oracle route first.
LD ji0_integrand(LD q) {
  if (q == 0.0L) return 0.0L;
  if (q <= 0.5L) {
    const LD u = q * q / 4;
    LD term = u, sum = u;
    for (int k = 1; k < 12; ++k) {
      term *= -u / ((k + 1.0L) * (k + 1.0L));
      sum += term;
      if (std::abs(term) < 1e-22L * sum) break;
    }
    return sum / q;
  }
  return static_cast<LD>(nsgf::specfun::detail::one_minus_j0(static_cast<double>(q))) / q;
}

LD ji0_segment(LD a, LD b) {
  if (a == b) return 0.0L;
  const LD scale = std::max<LD>(1e-6L, std::min<LD>(1.0L, b * b / 8));
  return nsgf::quad::adaptive_gk15<LD>(ji0_integrand, a, b, 1e-19L * scale, 200000, 5e-16L);
}

}  // namespace

long double ji0_oracle(double x) { return ji0_segment(0.0L, x); }

std::vector<long double> ji0_oracle_sweep(const std::vector<double>& ascending_x) {
  std::vector<long double> out;
  out.reserve(ascending_x.size());
  LD acc = 0.0L, prev = 0.0L;
  for (double x : ascending_x) {
    acc += ji0_segment(prev, x);
    prev = x;
    out.push_back(acc);
  }
  return out;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
  std::vector<double> pts(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    pts[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

}  // namespace nsgf_test
