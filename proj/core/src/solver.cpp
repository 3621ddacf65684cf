#include "nsgf/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace nsgf::solver {
namespace {

using grid::ScalarField;
using grid::UniformGrid;
using grid::VectorField;
using transform::SpectralBuffer;

// Signed per-axis offset encoded by the doubled-domain table index.
double signed_offset(int i, int n, double h) { return h * (i <= n ? i : i - 2 * n); }

double hpow(const UniformGrid& g) {
  double p = 1.0;
  for (int a = 0; a < g.dim; ++a) p *= g.spacing;
  return p;
}

std::size_t doubled_flat(const std::array<int, 3>& idx, int dim,
                         const std::array<int, 3>& doubled) {
  std::size_t flat = 0;
  for (int a = 0; a < dim; ++a) flat = flat * doubled[a] + static_cast<std::size_t>(idx[a]);
  return flat;
}

SpectralBuffer embed_and_transform(const SolverPlan& plan, const ScalarField& f) {
  if (!(f.grid == plan.grid))
    throw std::domain_error("solver: field grid does not match the plan grid");
  SpectralBuffer buf = SpectralBuffer::make(plan.grid.dim, plan.doubled_extents);
  const std::size_t n = plan.grid.sample_count();
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = plan.grid.multi_index(i);
    buf.data[doubled_flat(idx, plan.grid.dim, plan.doubled_extents)] = f.values[i];
  }
  transform::dft_forward(buf);
  return buf;
}

// Multiply a source spectrum by a pre-transformed kernel table, invert,
// restrict to the plan grid, scale by h^dim.
ScalarField convolve_with(const SolverPlan& plan, const SpectralBuffer& source_hat,
                          const SpectralBuffer& kernel_hat, double scale) {
  SpectralBuffer work = source_hat;
  for (std::size_t i = 0; i < work.data.size(); ++i) work.data[i] *= kernel_hat.data[i];
  transform::dft_inverse(work);
  ScalarField out = ScalarField::zeros(plan.grid);
  const std::size_t n = plan.grid.sample_count();
  const double s = scale * hpow(plan.grid);
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = plan.grid.multi_index(i);
    out.values[i] = s * work.data[doubled_flat(idx, plan.grid.dim, plan.doubled_extents)].real();
  }
  return out;
}

}  // namespace

SolverPlan build_plan(const UniformGrid& g, double reference_length, bool regularized,
                      SignConvention sign_convention) {
  SolverPlan plan;
  plan.grid = g;
  plan.kernel = kernels::RadialKernel::make(g.dim, kernels::sigma_from_spacing(g.spacing),
                                            reference_length);
  plan.regularized = regularized;
  plan.sign_convention = sign_convention;
  for (int a = 0; a < 3; ++a)
    plan.doubled_extents[a] = a < g.dim ? 2 * g.extents[a] : 1;

  const int d = g.dim;
  const double L = reference_length;

  SpectralBuffer gbuf = SpectralBuffer::make(d, plan.doubled_extents);
  std::array<SpectralBuffer, 3> kbuf;
  for (int c = 0; c < d; ++c) kbuf[c] = SpectralBuffer::make(d, plan.doubled_extents);

  const std::size_t total = gbuf.size();
  std::array<int, 3> idx{0, 0, 0};
  for (std::size_t flat = 0; flat < total; ++flat) {
    // decompose flat into the doubled multi-index, row-major
    std::size_t rem = flat;
    for (int a = d - 1; a >= 0; --a) {
      idx[a] = static_cast<int>(rem % plan.doubled_extents[a]);
      rem /= plan.doubled_extents[a];
    }
    std::array<double, 3> offset{0.0, 0.0, 0.0};
    double r2 = 0.0;
    for (int a = 0; a < d; ++a) {
      offset[a] = signed_offset(idx[a], g.extents[a], g.spacing);
      r2 += offset[a] * offset[a];
    }
    const double r = std::sqrt(r2);

    double gval;
    std::array<double, 3> grad{0.0, 0.0, 0.0};
    if (regularized) {
      gval = kernels::greens(plan.kernel, r);
      grad = kernels::gradient_vector(plan.kernel,
                                      std::span<const double>(offset.data(), d));
    } else {
      if (r == 0.0) {
        // 1D singular kernel is finite at the origin; 2D/3D entries are
        // zeroed (the classical O(h^2) baseline convention).
        gval = d == 1 ? L / 2.0 : 0.0;
      } else {
        gval = kernels::singular_greens(d, r, L);
        const double k = kernels::singular_gradient_radial(d, r);
        if (d == 1) {
          grad[0] = offset[0] > 0.0 ? k : -k;
        } else {
          for (int a = 0; a < d; ++a) grad[a] = -k * offset[a] / r;
        }
      }
    }
    gbuf.data[flat] = gval;
    for (int c = 0; c < d; ++c) kbuf[c].data[flat] = grad[c];
  }

  transform::dft_forward(gbuf);
  plan.greens_hat = std::move(gbuf);
  for (int c = 0; c < d; ++c) {
    transform::dft_forward(kbuf[c]);
    plan.gradient_hat[c] = std::move(kbuf[c]);
  }
  return plan;
}

ScalarField solve_poisson(const SolverPlan& plan, const ScalarField& B) {
  const SpectralBuffer b_hat = embed_and_transform(plan, B);
  return convolve_with(plan, b_hat, plan.greens_hat, 1.0);
}

VectorField solve_velocity_from_divergence(const SolverPlan& plan, const ScalarField& theta) {
  const SpectralBuffer t_hat = embed_and_transform(plan, theta);
  const double sign = plan.sign_convention == SignConvention::helmholtz ? -1.0 : 1.0;
  VectorField v = VectorField::zeros(plan.grid, plan.grid.dim);
  for (int c = 0; c < plan.grid.dim; ++c)
    v.component[c] = convolve_with(plan, t_hat, plan.gradient_hat[c], sign).values;
  return v;
}

VectorField solve_velocity_from_curl(const SolverPlan& plan, const VectorField& omega) {
  if (plan.grid.dim != 3)
    throw std::domain_error("solve_velocity_from_curl: vector vorticity requires dim 3");
  if (!(omega.grid == plan.grid) || omega.components != 3)
    throw std::domain_error("solve_velocity_from_curl: omega must be a 3-component field "
                            "on the plan grid");
  std::array<SpectralBuffer, 3> w_hat;
  for (int c = 0; c < 3; ++c) {
    ScalarField comp{plan.grid, omega.component[c]};
    w_hat[c] = embed_and_transform(plan, comp);
  }
  VectorField v = VectorField::zeros(plan.grid, 3);
  // v_i = eps_ijk (d_j G) * omega_k
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    ScalarField a = convolve_with(plan, w_hat[k], plan.gradient_hat[j], 1.0);
    ScalarField b = convolve_with(plan, w_hat[j], plan.gradient_hat[k], 1.0);
    for (std::size_t m = 0; m < a.values.size(); ++m)
      v.component[i][m] = a.values[m] - b.values[m];
  }
  return v;
}

VectorField solve_velocity_from_curl(const SolverPlan& plan, const ScalarField& omega) {
  if (plan.grid.dim != 2)
    throw std::domain_error("solve_velocity_from_curl: scalar vorticity requires dim 2");
  const SpectralBuffer w_hat = embed_and_transform(plan, omega);
  VectorField v = VectorField::zeros(plan.grid, 2);
  v.component[0] = convolve_with(plan, w_hat, plan.gradient_hat[1], 1.0).values;
  v.component[1] = convolve_with(plan, w_hat, plan.gradient_hat[0], -1.0).values;
  return v;
}

VectorField solve_streamfunction(const SolverPlan& plan, const VectorField& omega) {
  if (!(omega.grid == plan.grid) || omega.components != plan.grid.dim)
    throw std::domain_error("solve_streamfunction: omega shape mismatch");
  VectorField psi = VectorField::zeros(plan.grid, omega.components);
  for (int c = 0; c < omega.components; ++c) {
    ScalarField comp{plan.grid, omega.component[c]};
    psi.component[c] = solve_poisson(plan, comp).values;
  }
  return psi;
}

}  // namespace nsgf::solver
