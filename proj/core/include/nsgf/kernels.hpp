#pragma once

// Regularized (non-singular) Green's functions G, their gradient
// magnitudes K, the mollifier zeta, and the singular counterparts, for
// the unbounded Poisson equation in 1, 2 and 3 dimensions.
//
// All quantities are radial. The regularization length sigma ties to a
// mesh spacing h through sigma = h/pi, which makes the mollifier's
// spectrum equal to 1 up to the mesh Nyquist wavenumber and 0 beyond.
// A RadialKernel is immutable after construction; every evaluation is a
// pure function and thread-safe.

#include <array>
#include <span>

#include "nsgf/constants.hpp"

namespace nsgf::kernels {

struct Constants {
  static constexpr double pi = nsgf::pi;
  static constexpr double gamma = nsgf::euler_gamma;
};

/// Descriptor of one regularized kernel family: dimension, regularization
/// length sigma, reference length L (enters the 1D/2D integration
/// constants), and the derived constants c1 = L/2 and
/// c2 = (gamma - ln(2 sigma / L)) / (2 pi).
///
/// The c2 form places gamma inside the 1/(2 pi) factor; this is what makes
/// G approach -ln(r/L)/(2 pi) for large radii (see the asymptotic-matching
/// tests), via Ji0(x) -> ln x + gamma - ln 2.
struct RadialKernel {
  int dim;
  double sigma;
  double L;
  double c1;
  double c2;

  static RadialKernel make(int dim, double sigma, double L);
};

/// sigma = h / pi.
double sigma_from_spacing(double h);

/// Mollifier zeta(r); finite at r = 0 (1D: 1/(pi sigma), 2D:
/// 1/(4 pi sigma^2), 3D: 1/(6 pi^2 sigma^3)). Units length^-dim.
double zeta(const RadialKernel& kernel, double r);

/// Regularized Green's function G(r); finite at r = 0.
double greens(const RadialKernel& kernel, double r);

/// Radial gradient magnitude. For dim 2 and 3 this is K(rho) >= 0 with
/// grad G = -K e_r and K(0) = 0. For dim 1 it is the signed derivative
/// dG/dr = -Si(rho)/pi valid for r > 0.
double greens_gradient_radial(const RadialKernel& kernel, double r);

/// grad G at position x (first `dim` entries of the result meaningful).
/// dim 1 returns the odd extension -sign(x) Si(|x|/sigma)/pi; dim 2 and 3
/// return -K(rho) x/|x|, the zero vector at x = 0.
std::array<double, 3> gradient_vector(const RadialKernel& kernel, std::span<const double> x);

/// Singular Green's function: -(r-L)/2, -ln(r/L)/(2 pi), 1/(4 pi r).
/// Throws std::domain_error at r <= 0.
double singular_greens(int dim, double r, double L);

/// Radial gradient of the singular Green's function (signed derivative
/// for dim 1, K >= 0 magnitude for dim 2 and 3). Throws at r <= 0.
double singular_gradient_radial(int dim, double r);

}  // namespace nsgf::kernels
