#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "nsgf/field_io.hpp"
#include "nsgf/harness.hpp"
#include "nsgf/kernels.hpp"
#include "nsgf/transform.hpp"

namespace nsgf::harness {
namespace {

double field_max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double boundary_max_abs(const grid::ScalarField& f) {
  double m = 0.0;
  const auto& g = f.grid;
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    const auto idx = g.multi_index(i);
    bool on_boundary = false;
    for (int a = 0; a < g.dim; ++a)
      if (idx[a] == 0 || idx[a] == g.extents[a] - 1) on_boundary = true;
    if (on_boundary) m = std::max(m, std::abs(f.values[i]));
  }
  return m;
}

// d/dx_axis via the periodic spectrum of the field's own grid.
std::vector<double> spectral_derivative_component(const grid::UniformGrid& g,
                                                  const std::vector<double>& values, int axis) {
  auto buf = transform::SpectralBuffer::make(g.dim, g.extents);
  for (std::size_t i = 0; i < values.size(); ++i) buf.data[i] = values[i];
  transform::dft_forward(buf);
  for (std::size_t i = 0; i < buf.data.size(); ++i) {
    const auto idx = g.multi_index(i);
    int f = idx[axis] <= g.extents[axis] / 2 ? idx[axis] : idx[axis] - g.extents[axis];
    if (idx[axis] == g.extents[axis] / 2) f = 0;  // drop the Nyquist derivative
    const double k = 2.0 * nsgf::pi * f / (g.extents[axis] * g.spacing);
    buf.data[i] *= std::complex<double>(0.0, k);
  }
  transform::dft_inverse(buf);
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = buf.data[i].real();
  return out;
}

}  // namespace

SolveOutcome run_solve(const TestCase& tc, int n, bool regularized) {
  const grid::UniformGrid g = make_grid(tc.dim, n);
  SolveOutcome out;

  if (tc.kind == RhsKind::point_vortex) {
    grid::ScalarField omega = grid::ScalarField::zeros(g);
    std::array<int, 3> center{g.extents[0] / 2, g.extents[1] / 2, 0};
    omega.values[g.flat_index(center)] = 1.0 / (g.spacing * g.spacing);
    const auto plan = solver::build_plan(g, tc.ref_length, regularized);
    out.velocity = solver::solve_velocity_from_curl(plan, omega);
    out.vector_valued = true;
    out.solution = grid::ScalarField::zeros(g);
    for (std::size_t i = 0; i < out.solution.values.size(); ++i)
      out.solution.values[i] = std::hypot(out.velocity.component[0][i],
                                          out.velocity.component[1][i]);
    const auto center_pos = g.position(center);
    grid::ScalarField ref = grid::sample_radial(
        g,
        [&](double r) {
          return point_vortex_speed(plan.kernel.sigma, tc.ref_length, r, regularized);
        },
        center_pos);
    const auto nm = grid::norms(out.solution, ref);
    const double scale = field_max_abs(ref.values);
    double l2ref = 0.0;
    for (double v : ref.values) l2ref += v * v;
    double hpow = 1.0;
    for (int a = 0; a < g.dim; ++a) hpow *= g.spacing;
    l2ref = std::sqrt(hpow * l2ref);
    out.error_linf_rel = nm.linf / scale;
    out.error_l2_rel = nm.l2 / l2ref;
    out.boundary_max = 0.0;
    out.boundary_warning = false;
    return out;
  }

  const grid::ScalarField B = sample_rhs(tc, g);
  out.boundary_max = boundary_max_abs(B);
  // The outermost sample ring sits half a cell inside the mathematical
  // boundary; 1e-13 of the peak separates resolved tails from genuinely
  // truncated ones.
  out.boundary_warning = out.boundary_max > 1e-13 * field_max_abs(B.values);
  const auto plan = solver::build_plan(g, tc.ref_length, regularized);
  out.solution = solver::solve_poisson(plan, B);
  const grid::ScalarField ref = reference_field(tc, g);
  const auto nm = grid::norms(out.solution, ref);
  const double scale = field_max_abs(ref.values);
  double l2ref = 0.0;
  for (double v : ref.values) l2ref += v * v;
  double hpow = 1.0;
  for (int a = 0; a < g.dim; ++a) hpow *= g.spacing;
  l2ref = std::sqrt(hpow * l2ref);
  out.error_linf_rel = nm.linf / scale;
  out.error_l2_rel = nm.l2 / l2ref;
  return out;
}

std::vector<ConvergenceRecord> run_convergence(const TestCase& tc, const std::vector<int>& ns,
                                               bool regularized) {
  std::vector<ConvergenceRecord> records;
  double prev = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const int n = ns[i];
    if (i > 0 && ns[i] <= ns[i - 1])
      throw std::domain_error("run_convergence: n values must be strictly increasing");
    const auto outcome = run_solve(tc, n, regularized);
    ConvergenceRecord rec;
    rec.n = n;
    rec.h = make_grid(tc.dim, n).spacing;
    rec.regularized = regularized;
    rec.error_linf = outcome.error_linf_rel;
    rec.error_l2 = outcome.error_l2_rel;
    rec.observed_order = i == 0 ? std::numeric_limits<double>::quiet_NaN()
                                : std::log2(prev / outcome.error_linf_rel);
    prev = outcome.error_linf_rel;
    records.push_back(rec);
  }
  return records;
}

void write_convergence_csv(const std::string& path,
                           const std::vector<ConvergenceRecord>& records) {
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw io::IoError("cannot open for writing: " + path);
  std::fprintf(fp, "n,h,kernel,error_linf,error_l2,observed_order\n");
  for (const auto& r : records) {
    std::fprintf(fp, "%d,%.17g,%s,%.17g,%.17g,", r.n, r.h,
                 r.regularized ? "regularized" : "singular", r.error_linf, r.error_l2);
    if (std::isnan(r.observed_order))
      std::fprintf(fp, "\n");
    else
      std::fprintf(fp, "%.17g\n", r.observed_order);
  }
  if (std::fclose(fp) != 0) throw io::IoError("write failed: " + path);
}

void write_kernel_table_csv(const std::string& path, int dim, double sigma, double L,
                            double r_max_over_h, int samples) {
  if (samples < 2) throw std::domain_error("kernel table needs at least 2 samples");
  if (!(r_max_over_h > 0.0)) throw std::domain_error("kernel table needs r_max > 0");
  const auto kernel = kernels::RadialKernel::make(dim, sigma, L);
  const double h = sigma * nsgf::pi;
  std::FILE* fp = std::fopen(path.c_str(), "w");
  if (!fp) throw io::IoError("cannot open for writing: " + path);
  std::fprintf(fp, "# singular kernel columns are empty at r = 0 (singularity)\n");
  std::fprintf(fp, "r_over_h,G_regularized,G_singular,K_regularized,K_singular\n");
  for (int i = 0; i < samples; ++i) {
    const double roh = r_max_over_h * i / (samples - 1);
    const double r = roh * h;
    const double greg = kernels::greens(kernel, r);
    const double kreg = kernels::greens_gradient_radial(kernel, r);
    std::fprintf(fp, "%.17g,%.17g,", roh, greg);
    if (r == 0.0)
      std::fprintf(fp, ",%.17g,\n", kreg);
    else
      std::fprintf(fp, "%.17g,%.17g,%.17g\n", kernels::singular_greens(dim, r, L), kreg,
                   kernels::singular_gradient_radial(dim, r));
  }
  if (std::fclose(fp) != 0) throw io::IoError("write failed: " + path);
}

grid::ScalarField spectral_divergence(const grid::VectorField& v) {
  grid::ScalarField out = grid::ScalarField::zeros(v.grid);
  for (int c = 0; c < v.components; ++c) {
    const auto d = spectral_derivative_component(v.grid, v.component[c], c);
    for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] += d[i];
  }
  return out;
}

grid::VectorField spectral_curl(const grid::VectorField& v) {
  if (v.grid.dim != 3 || v.components != 3)
    throw std::domain_error("spectral_curl: requires a 3D vector field");
  grid::VectorField out = grid::VectorField::zeros(v.grid, 3);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const auto a = spectral_derivative_component(v.grid, v.component[k], j);
    const auto b = spectral_derivative_component(v.grid, v.component[j], k);
    for (std::size_t m = 0; m < a.size(); ++m) out.component[i][m] = a[m] - b[m];
  }
  return out;
}

grid::VectorField spectral_gradient(const grid::ScalarField& f) {
  grid::VectorField out = grid::VectorField::zeros(f.grid, f.grid.dim);
  for (int c = 0; c < f.grid.dim; ++c)
    out.component[c] = spectral_derivative_component(f.grid, f.values, c);
  return out;
}

}  // namespace nsgf::harness
