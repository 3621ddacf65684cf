#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>

#include "nsgf/harness.hpp"
#include "nsgf/kernels.hpp"
#include "nsgf/specfun.hpp"
#include "nsgf/transform.hpp"

namespace nsgf::harness {
namespace {

template <class... Args>
std::string fmt(const char* format, Args... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

// --- suite: specfun accuracy against the quadrature oracle ---------------

SuiteResult suite_specfun_accuracy() {
  double worst = 0.0;
  // Si and Ji0 on log-spaced points where direct quadrature stays cheap.
  for (int i = 0; i <= 400; ++i) {
    const double x = std::exp(std::log(1e-6) + (std::log(30.0) - std::log(1e-6)) * i / 400.0);
    const double si_ref = specfun::oracle_quadrature(
        [](double q) { return q == 0.0 ? 1.0 : std::sin(q) / q; }, 0.0, x,
        std::max(1e-16 * x, 1e-18));
    worst = std::max(worst, std::abs(specfun::sine_integral(x) - si_ref) /
                                std::max(std::abs(si_ref), 1e-300));
    const double ji_ref = specfun::oracle_quadrature(
        [](double q) {
          return q == 0.0 ? 0.0 : specfun::detail::one_minus_j0(q) / q;
        },
        0.0, x, std::max(1e-16 * x * x / 8, 1e-20));
    worst = std::max(worst, std::abs(specfun::bessel_integral_ji0(x) - ji_ref) /
                                std::max(std::abs(ji_ref), 1e-300));
  }
  // J0/J1 against the cosine representation; the envelope floor keeps the
  // double-precision oracle meaningful next to the Bessel zeros.
  for (int nu = 0; nu <= 1; ++nu) {
    for (int i = 0; i <= 300; ++i) {
      const double x = 18.0 * (i + 1) / 301.0;
      const double ref = specfun::oracle_quadrature(
                             [nu, x](double t) { return std::cos(nu * t - x * std::sin(t)); },
                             0.0, nsgf::pi, 1e-15) /
                         nsgf::pi;
      worst = std::max(worst, std::abs(specfun::bessel_j(nu, x) - ref) /
                                  std::max(std::abs(ref), 1e-3));
    }
  }
  // Large-argument envelopes.
  for (double x : {50.0, 100.0, 400.0}) {
    const double si = specfun::sine_integral(x);
    if (std::abs(si - nsgf::pi / 2) > 2.0 / x)
      return {"specfun-accuracy", false, "Si envelope violated"};
  }
  const bool pass = worst < 1e-12;
  return {"specfun-accuracy", pass, fmt("worst rel %.3g (bar %.0e)", worst, 1e-12)};
}

// --- suite: kernel ODE residual ------------------------------------------

SuiteResult suite_kernel_ode_residual() {
  const double step = 1e-3;
  double worst = 0.0;
  for (int d = 1; d <= 3; ++d) {
    const auto k = kernels::RadialKernel::make(d, 1.0, 3.0);
    for (double rho : {0.5, 1.0, 2.0, 5.0, 10.0}) {
      auto G = [&](double r) { return kernels::greens(k, r); };
      const double g2 = (-G(rho - 2 * step) + 16 * G(rho - step) - 30 * G(rho) +
                         16 * G(rho + step) - G(rho + 2 * step)) /
                        (12 * step * step);
      const double g1 =
          (G(rho - 2 * step) - 8 * G(rho - step) + 8 * G(rho + step) - G(rho + 2 * step)) /
          (12 * step);
      const double lap = g2 + (d - 1) * g1 / rho;
      worst = std::max(worst, std::abs(lap + kernels::zeta(k, rho)) /
                                  std::abs(kernels::zeta(k, rho)));
    }
  }
  return {"kernel-ode-residual", worst <= 1e-6, fmt("worst rel %.3g (bar %.0e)", worst, 1e-6)};
}

// --- suite: asymptotic matching (validates the integration constants) ----

SuiteResult suite_asymptotic_matching(bool flip_c2_gamma_sign) {
  double worst_ratio = 0.0;
  bool decreasing = true;
  for (int d = 1; d <= 3; ++d) {
    const auto k = kernels::RadialKernel::make(d, 1.0, 3.0);
    const double c2 = flip_c2_gamma_sign
                          ? (-kernels::Constants::gamma - std::log(2.0 / 3.0)) / (2.0 * nsgf::pi)
                          : k.c2;
    auto G = [&](double rho) {
      if (d == 2) return -specfun::bessel_integral_ji0(rho) / (2.0 * nsgf::pi) + c2;
      return kernels::greens(k, rho);
    };
    double prev = std::numeric_limits<double>::infinity();
    for (double rho : {50.0, 100.0, 200.0, 400.0}) {
      const double diff = std::abs(G(rho) - kernels::singular_greens(d, rho, 3.0));
      const double measure =
          d == 1 ? diff : diff / std::abs(kernels::singular_greens(d, rho, 3.0));
      if (measure >= prev) decreasing = false;
      prev = measure;
      if (d >= 2 && rho == 400.0) worst_ratio = std::max(worst_ratio, measure);
    }
  }
  const bool pass = decreasing && worst_ratio <= 1e-3;
  return {"asymptotic-matching", pass,
          fmt("rel at rho=400: %.3g (bar %.0e)", worst_ratio, 1e-3) +
              (decreasing ? "" : ", not decreasing")};
}

// --- suite: DFT against the naive O(N^2) oracle ---------------------------

void naive_dft_1d(std::vector<std::complex<double>>& a, bool inverse) {
  const int n = static_cast<int>(a.size());
  std::vector<std::complex<double>> out(a.size());
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double ang = (inverse ? 2.0 : -2.0) * nsgf::pi * k * j / n;
      acc += a[j] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = inverse ? acc / static_cast<double>(n) : acc;
  }
  a = out;
}

SuiteResult suite_dft_oracle() {
  std::mt19937 rng(20240601);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  double worst = 0.0;
  for (int n : {16, 64}) {
    auto buf = transform::SpectralBuffer::make(1, {n, 1, 1});
    std::vector<std::complex<double>> ref(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      buf.data[i] = {dist(rng), dist(rng)};
      ref[i] = buf.data[i];
    }
    transform::dft_forward(buf);
    naive_dft_1d(ref, false);
    double scale = 0.0;
    for (int i = 0; i < n; ++i) scale = std::max(scale, std::abs(ref[i]));
    for (int i = 0; i < n; ++i)
      worst = std::max(worst, std::abs(buf.data[i] - ref[i]) / scale);
    transform::dft_inverse(buf);
    naive_dft_1d(ref, true);
    for (int i = 0; i < n; ++i) worst = std::max(worst, std::abs(buf.data[i] - ref[i]));
  }
  return {"dft-oracle", worst <= 1e-13, fmt("worst rel %.3g (bar %.0e)", worst, 1e-13)};
}

// --- suites: convolution identity and aperiodicity ------------------------

grid::ScalarField direct_convolution(const grid::ScalarField& src,
                                     const kernels::RadialKernel& k) {
  const auto& g = src.grid;
  grid::ScalarField out = grid::ScalarField::zeros(g);
  double hpow = 1.0;
  for (int a = 0; a < g.dim; ++a) hpow *= g.spacing;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const auto idx = g.multi_index(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < src.values.size(); ++j) {
      if (src.values[j] == 0.0) continue;
      const auto jdx = g.multi_index(j);
      double r2 = 0.0;
      for (int a = 0; a < g.dim; ++a) {
        const double d = g.spacing * (idx[a] - jdx[a]);
        r2 += d * d;
      }
      acc += kernels::greens(k, std::sqrt(r2)) * src.values[j];
    }
    out.values[i] = hpow * acc;
  }
  return out;
}

// Periodic (wrap-around) convolution on the *original* grid; this is the
// faulty path selected by skip_zero_padding.
grid::ScalarField periodic_convolution(const grid::ScalarField& src,
                                       const kernels::RadialKernel& k) {
  const auto& g = src.grid;
  auto buf = transform::SpectralBuffer::make(g.dim, g.extents);
  auto ker = transform::SpectralBuffer::make(g.dim, g.extents);
  for (std::size_t i = 0; i < src.values.size(); ++i) {
    buf.data[i] = src.values[i];
    const auto idx = g.multi_index(i);
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const int n = g.extents[a];
      const int off = idx[a] <= n / 2 ? idx[a] : idx[a] - n;
      const double d = g.spacing * off;
      r2 += d * d;
    }
    ker.data[i] = kernels::greens(k, std::sqrt(r2));
  }
  transform::dft_forward(buf);
  transform::dft_forward(ker);
  for (std::size_t i = 0; i < buf.data.size(); ++i) buf.data[i] *= ker.data[i];
  transform::dft_inverse(buf);
  grid::ScalarField out = grid::ScalarField::zeros(g);
  double hpow = 1.0;
  for (int a = 0; a < g.dim; ++a) hpow *= g.spacing;
  for (std::size_t i = 0; i < out.values.size(); ++i)
    out.values[i] = hpow * buf.data[i].real();
  return out;
}

grid::ScalarField doubled_table(const grid::UniformGrid& g, const kernels::RadialKernel& k) {
  std::array<int, 3> dext{1, 1, 1};
  for (int a = 0; a < g.dim; ++a) dext[a] = 2 * g.extents[a];
  auto tg = grid::UniformGrid::make(g.dim, dext, g.spacing, g.origin);
  grid::ScalarField table = grid::ScalarField::zeros(tg);
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const auto idx = tg.multi_index(i);
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const int n = g.extents[a];
      const double d = g.spacing * (idx[a] <= n ? idx[a] : idx[a] - 2 * n);
      r2 += d * d;
    }
    table.values[i] = kernels::greens(k, std::sqrt(r2));
  }
  return table;
}

SuiteResult suite_convolution_identity() {
  const int n = 8;
  const auto g = make_grid(3, n);
  const auto k = kernels::RadialKernel::make(3, kernels::sigma_from_spacing(g.spacing), 3.0);
  const auto table = doubled_table(g, k);
  // impulse reproduces the kernel slice
  grid::ScalarField src = grid::ScalarField::zeros(g);
  const double hpow = g.spacing * g.spacing * g.spacing;
  std::array<int, 3> c{n / 2, n / 2, n / 2};
  src.values[g.flat_index(c)] = 1.0 / hpow;
  const auto conv = transform::convolve_free_space(src, table);
  double worst = 0.0;
  for (std::size_t i = 0; i < conv.values.size(); ++i) {
    const auto idx = g.multi_index(i);
    double r2 = 0.0;
    for (int a = 0; a < 3; ++a) {
      const double d = g.spacing * (idx[a] - c[a]);
      r2 += d * d;
    }
    worst = std::max(worst,
                     std::abs(conv.values[i] - kernels::greens(k, std::sqrt(r2))));
  }
  // two impulses against the direct sum
  src.values[g.flat_index({1, 2, 3})] = 2.5 / hpow;
  const auto conv2 = transform::convolve_free_space(src, table);
  const auto direct = direct_convolution(src, k);
  double scale = 0.0;
  for (double v : direct.values) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < conv2.values.size(); ++i)
    worst = std::max(worst, std::abs(conv2.values[i] - direct.values[i]) / scale);
  return {"convolution-identity", worst <= 1e-12,
          fmt("worst %.3g (bar %.0e)", worst, 1e-12)};
}

SuiteResult suite_aperiodicity(bool skip_zero_padding) {
  const int n = 8;
  const auto g = make_grid(3, n);
  const auto k = kernels::RadialKernel::make(3, kernels::sigma_from_spacing(g.spacing), 3.0);
  const auto table = doubled_table(g, k);
  double worst = 0.0;
  // a corner source is where wrap-around contamination shows up
  for (std::array<int, 3> at : {std::array<int, 3>{1, 1, 1}, std::array<int, 3>{4, 4, 4}}) {
    grid::ScalarField src = grid::ScalarField::zeros(g);
    src.values[g.flat_index(at)] = 1.0;
    const auto got = skip_zero_padding ? periodic_convolution(src, k)
                                       : transform::convolve_free_space(src, table);
    const auto want = direct_convolution(src, k);
    double scale = 0.0;
    for (double v : want.values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < got.values.size(); ++i)
      worst = std::max(worst, std::abs(got.values[i] - want.values[i]) / scale);
  }
  return {"aperiodicity", worst <= 1e-12, fmt("worst rel %.3g (bar %.0e)", worst, 1e-12)};
}

}  // namespace

bool SelftestReport::all_pass() const {
  for (const auto& s : suites)
    if (!s.pass) return false;
  return true;
}

SelftestReport run_selftest(const FaultInjection& faults) {
  SelftestReport report;
  report.suites.push_back(suite_specfun_accuracy());
  report.suites.push_back(suite_kernel_ode_residual());
  report.suites.push_back(suite_asymptotic_matching(faults.flip_c2_gamma_sign));
  report.suites.push_back(suite_dft_oracle());
  report.suites.push_back(suite_convolution_identity());
  report.suites.push_back(suite_aperiodicity(faults.skip_zero_padding));
  return report;
}

}  // namespace nsgf::harness
