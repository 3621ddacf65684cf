#pragma once

// Analytic test cases, reference solutions, convergence studies and the
// self-test suites backing the CLI. Reference potentials come from the
// 1D radial ODE integrated by the quadrature oracle rather than from
// transcribed closed forms.

#include <string>
#include <vector>

#include "nsgf/grid.hpp"
#include "nsgf/solver.hpp"

namespace nsgf::harness {

enum class RhsKind { gaussian, compact_bump, point_vortex };

RhsKind rhs_kind_from_name(const std::string& name);
std::string rhs_kind_name(RhsKind kind);

/// One analytic test case on the canonical domain [-1,1]^dim.
/// `width` is the Gaussian width c or the bump radius; <= 0 selects the
/// default (half-width/8.6 for the Gaussian, so the boundary value sits
/// below 1e-16 of the peak; 0.5 for the bump).
struct TestCase {
  int dim;
  RhsKind kind;
  double width;
  double ref_length;

  static TestCase make(int dim, RhsKind kind, double width = 0.0, double ref_length = 3.0);

  double rhs(double r) const;
  /// Radius beyond which the RHS is identically treated as zero.
  double decay_radius() const;
};

grid::UniformGrid make_grid(int dim, int n);

grid::ScalarField sample_rhs(const TestCase& tc, const grid::UniformGrid& g);

/// Reference potential A(r) for the scalar cases, by radial quadrature.
double reference_potential(const TestCase& tc, double r);

/// Reference field on a grid (radii deduplicated before quadrature).
grid::ScalarField reference_field(const TestCase& tc, const grid::UniformGrid& g);

/// Azimuthal speed of the 2D unit point vortex at radius r, for a kernel
/// of regularization length sigma (tied to the solve grid's spacing).
double point_vortex_speed(double sigma, double ref_length, double r, bool regularized);

struct SolveOutcome {
  grid::ScalarField solution;   // scalar potential, or |v| for point-vortex
  grid::VectorField velocity;   // populated for point-vortex
  bool vector_valued = false;
  double error_linf_rel = 0.0;
  double error_l2_rel = 0.0;
  double boundary_max = 0.0;    // measured max |rhs| on the domain boundary
  bool boundary_warning = false;
};

SolveOutcome run_solve(const TestCase& tc, int n, bool regularized);

struct ConvergenceRecord {
  int n;
  double h;
  bool regularized;
  double error_linf;
  double error_l2;
  double observed_order;  // NaN on the first row of a kernel group
};

std::vector<ConvergenceRecord> run_convergence(const TestCase& tc, const std::vector<int>& ns,
                                               bool regularized);

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceRecord>& records);

/// Fig-1 style kernel tabulation: columns r/h, G_regularized, G_singular,
/// K_regularized, K_singular on [0, r_max_over_h] (radius in units of h).
/// Singular entries at r = 0 are left empty, as documented in the header.
void write_kernel_table_csv(const std::string& path, int dim, double sigma, double L,
                            double r_max_over_h, int samples);

/// Spectral (FFT-based) derivatives on the field's own grid, used as
/// verification oracles. The Nyquist mode's derivative is zeroed.
grid::ScalarField spectral_divergence(const grid::VectorField& v);
grid::VectorField spectral_curl(const grid::VectorField& v);
grid::VectorField spectral_gradient(const grid::ScalarField& f);

// ---------------------------------------------------------------------
// Self test

struct FaultInjection {
  bool flip_c2_gamma_sign = false;  // sabotage the 2D integration constant
  bool skip_zero_padding = false;   // sabotage the domain doubling
};

struct SuiteResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  bool all_pass() const;
};

SelftestReport run_selftest(const FaultInjection& faults = {});

}  // namespace nsgf::harness
