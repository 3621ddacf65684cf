#include "nsgf/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nsgf/specfun.hpp"

namespace nsgf::kernels {
namespace {

constexpr double kSeriesCutoff = 1e-2;  // rho* below which series forms take over

double require_radius(double r, const char* who) {
  if (!std::isfinite(r) || r < 0.0)
    throw std::domain_error(std::string(who) + ": radius must be finite and >= 0");
  return r;
}

// Si(rho)/rho, series below rho*.
double si_over_rho(double rho) {
  if (rho < kSeriesCutoff) {
    const double r2 = rho * rho;
    return 1.0 - r2 / 18.0 + r2 * r2 / 600.0 - r2 * r2 * r2 / 35280.0;
  }
  return specfun::sine_integral(rho) / rho;
}

// (1 - J0(rho))/rho, series below rho*.
double one_minus_j0_over_rho(double rho) {
  if (rho < kSeriesCutoff) {
    const double r2 = rho * rho;
    return rho / 4.0 - rho * r2 / 64.0 + rho * r2 * r2 / 2304.0;
  }
  return specfun::detail::one_minus_j0(rho) / rho;
}

// (Si(rho) - sin(rho))/rho^2, series below rho*.
double si_minus_sin_over_rho2(double rho) {
  if (rho < kSeriesCutoff) {
    const double r2 = rho * rho;
    return rho / 9.0 - rho * r2 / 150.0 + rho * r2 * r2 / 5880.0;
  }
  return specfun::detail::si_minus_sin(rho) / (rho * rho);
}

// (sin(rho)/rho - cos(rho))/rho^2, series below rho*.
double zeta3_reduced(double rho) {
  if (rho < kSeriesCutoff) {
    const double r2 = rho * rho;
    return 1.0 / 3.0 - r2 / 30.0 + r2 * r2 / 840.0;
  }
  return specfun::detail::sinx_over_x_minus_cosx(rho) / (rho * rho);
}

// J1(rho)/rho, series below rho*.
double j1_over_rho(double rho) {
  if (rho < kSeriesCutoff) {
    const double u = rho * rho / 4.0;
    return 0.5 * (1.0 - u / 2.0 + u * u / 12.0);
  }
  return specfun::bessel_j(1.0, rho) / rho;
}

}  // namespace

RadialKernel RadialKernel::make(int dim, double sigma, double L) {
  if (dim < 1 || dim > 3) throw std::domain_error("RadialKernel: dim must be 1, 2 or 3");
  if (!(sigma > 0.0) || !std::isfinite(sigma))
    throw std::domain_error("RadialKernel: sigma must be positive and finite");
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::domain_error("RadialKernel: L must be positive and finite");
  RadialKernel k;
  k.dim = dim;
  k.sigma = sigma;
  k.L = L;
  k.c1 = L / 2.0;
  k.c2 = (Constants::gamma - std::log(2.0 * sigma / L)) / (2.0 * pi);
  return k;
}

double sigma_from_spacing(double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::domain_error("sigma_from_spacing: spacing must be positive and finite");
  return h / pi;
}

double zeta(const RadialKernel& kernel, double r) {
  require_radius(r, "zeta");
  const double s = kernel.sigma;
  const double rho = r / s;
  switch (kernel.dim) {
    case 1:
      if (rho == 0.0) return 1.0 / (pi * s);
      return std::sin(rho) / (pi * s * rho);
    case 2:
      return j1_over_rho(rho) / (2.0 * pi * s * s);
    default:
      return zeta3_reduced(rho) / (2.0 * pi * pi * s * s * s);
  }
}

double greens(const RadialKernel& kernel, double r) {
  require_radius(r, "greens");
  const double s = kernel.sigma;
  const double rho = r / s;
  switch (kernel.dim) {
    case 1:
      return -(s / pi) * (specfun::sine_integral(rho) * rho + std::cos(rho)) + kernel.c1;
    case 2:
      return -specfun::bessel_integral_ji0(rho) / (2.0 * pi) + kernel.c2;
    default:
      return si_over_rho(rho) / (2.0 * pi * pi * s);
  }
}

double greens_gradient_radial(const RadialKernel& kernel, double r) {
  require_radius(r, "greens_gradient_radial");
  const double s = kernel.sigma;
  const double rho = r / s;
  switch (kernel.dim) {
    case 1:
      return -specfun::sine_integral(rho) / pi;
    case 2:
      return one_minus_j0_over_rho(rho) / (2.0 * pi * s);
    default:
      return si_minus_sin_over_rho2(rho) / (2.0 * pi * pi * s * s);
  }
}

std::array<double, 3> gradient_vector(const RadialKernel& kernel, std::span<const double> x) {
  if (static_cast<int>(x.size()) != kernel.dim)
    throw std::domain_error("gradient_vector: position size must match kernel dimension");
  std::array<double, 3> g{0.0, 0.0, 0.0};
  if (kernel.dim == 1) {
    const double ax = std::abs(x[0]);
    if (ax == 0.0) return g;
    const double sign = x[0] > 0.0 ? 1.0 : -1.0;
    g[0] = sign * greens_gradient_radial(kernel, ax);
    return g;
  }
  double r2 = 0.0;
  for (int a = 0; a < kernel.dim; ++a) r2 += x[a] * x[a];
  const double r = std::sqrt(r2);
  if (r == 0.0) return g;
  const double k = greens_gradient_radial(kernel, r);
  for (int a = 0; a < kernel.dim; ++a) g[a] = -k * x[a] / r;
  return g;
}

double singular_greens(int dim, double r, double L) {
  if (dim < 1 || dim > 3) throw std::domain_error("singular_greens: dim must be 1, 2 or 3");
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::domain_error("singular_greens: radius must be positive (kernel is singular)");
  switch (dim) {
    case 1:
      return -(r - L) / 2.0;
    case 2:
      return -std::log(r / L) / (2.0 * pi);
    default:
      return 1.0 / (4.0 * pi * r);
  }
}

double singular_gradient_radial(int dim, double r) {
  if (dim < 1 || dim > 3)
    throw std::domain_error("singular_gradient_radial: dim must be 1, 2 or 3");
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::domain_error("singular_gradient_radial: radius must be positive");
  switch (dim) {
    case 1:
      return -0.5;  // dG/dr
    case 2:
      return 1.0 / (2.0 * pi * r);  // K with grad G = -K e_r
    default:
      return 1.0 / (4.0 * pi * r * r);
  }
}

}  // namespace nsgf::kernels
