#pragma once

// Free-space Poisson and velocity solves: A = G * B, velocity from a
// divergence or curl source, and the streamfunction solve. A SolverPlan
// holds the kernel tables for G and each gradient component, sampled on
// the doubled grid and pre-transformed; building a plan twice from the
// same inputs is bit-identical. Plans are immutable after construction
// and safe to share across threads; each solve owns its scratch buffers.

#include <array>

#include "nsgf/grid.hpp"
#include "nsgf/kernels.hpp"
#include "nsgf/transform.hpp"

namespace nsgf::solver {

/// Sign convention for the divergence-driven velocity solve.
/// `helmholtz`: v = -grad(G * theta), so the divergence of the output
/// reproduces theta. `flipped` negates the output (the opposite sign
/// choice, kept selectable for comparison runs).
enum class SignConvention { helmholtz, flipped };

struct SolverPlan {
  grid::UniformGrid grid;
  kernels::RadialKernel kernel;
  bool regularized = true;
  SignConvention sign_convention = SignConvention::helmholtz;
  std::array<int, 3> doubled_extents{1, 1, 1};
  transform::SpectralBuffer greens_hat;                  // pre-transformed G table
  std::array<transform::SpectralBuffer, 3> gradient_hat; // pre-transformed grad G tables
};

SolverPlan build_plan(const grid::UniformGrid& g, double reference_length, bool regularized,
                      SignConvention sign_convention = SignConvention::helmholtz);

/// A = G * B, solving laplacian(A) = -B with free-space behavior.
grid::ScalarField solve_poisson(const SolverPlan& plan, const grid::ScalarField& B);

/// Velocity whose divergence reproduces theta (helmholtz convention).
grid::VectorField solve_velocity_from_divergence(const SolverPlan& plan,
                                                 const grid::ScalarField& theta);

/// 3D: v_i = eps_ijk (d_j G) * omega_k for a (solenoidal) vector vorticity.
grid::VectorField solve_velocity_from_curl(const SolverPlan& plan,
                                           const grid::VectorField& omega);

/// 2D: v = ((d_y G) * omega, -(d_x G) * omega) for scalar vorticity.
grid::VectorField solve_velocity_from_curl(const SolverPlan& plan,
                                           const grid::ScalarField& omega);

/// Componentwise Poisson solve of -laplacian(psi) = omega.
grid::VectorField solve_streamfunction(const SolverPlan& plan, const grid::VectorField& omega);

}  // namespace nsgf::solver
