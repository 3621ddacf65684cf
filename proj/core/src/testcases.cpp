#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "nsgf/harness.hpp"
#include "nsgf/kernels.hpp"
#include "nsgf/specfun.hpp"

namespace nsgf::harness {
namespace {

constexpr double kHalfWidth = 1.0;  // canonical domain [-1,1]^d

// exp(-r^2/(2 c^2)) falls below 1e-16 beyond r = 8.6 c.
constexpr double kGaussianDecayFactor = 8.6;

}  // namespace

RhsKind rhs_kind_from_name(const std::string& name) {
  if (name == "gaussian") return RhsKind::gaussian;
  if (name == "compact-bump") return RhsKind::compact_bump;
  if (name == "point-vortex") return RhsKind::point_vortex;
  throw std::domain_error("unknown test case: " + name);
}

std::string rhs_kind_name(RhsKind kind) {
  switch (kind) {
    case RhsKind::gaussian: return "gaussian";
    case RhsKind::compact_bump: return "compact-bump";
    case RhsKind::point_vortex: return "point-vortex";
  }
  return "?";
}

TestCase TestCase::make(int dim, RhsKind kind, double width, double ref_length) {
  if (dim < 1 || dim > 3) throw std::domain_error("TestCase: dim must be 1, 2 or 3");
  if (kind == RhsKind::point_vortex && dim != 2)
    throw std::domain_error("TestCase: point-vortex is a 2D case");
  if (!(ref_length > 0.0)) throw std::domain_error("TestCase: ref-length must be positive");
  TestCase tc;
  tc.dim = dim;
  tc.kind = kind;
  tc.ref_length = ref_length;
  if (width > 0.0) {
    tc.width = width;
  } else {
    tc.width = kind == RhsKind::compact_bump ? 0.5 : kHalfWidth / kGaussianDecayFactor;
  }
  return tc;
}

double TestCase::rhs(double r) const {
  switch (kind) {
    case RhsKind::gaussian:
      return std::exp(-r * r / (2.0 * width * width));
    case RhsKind::compact_bump: {
      const double u = r / width;
      if (u >= 1.0) return 0.0;
      return std::exp(-1.0 / (1.0 - u * u));
    }
    case RhsKind::point_vortex:
      return 0.0;  // handled as a discrete impulse, not a sampled density
  }
  return 0.0;
}

double TestCase::decay_radius() const {
  switch (kind) {
    case RhsKind::gaussian: return 12.0 * width;
    case RhsKind::compact_bump: return width;
    case RhsKind::point_vortex: return 0.0;
  }
  return 0.0;
}

grid::UniformGrid make_grid(int dim, int n) {
  std::array<int, 3> ext{n, n, n};
  std::array<double, 3> origin{-kHalfWidth, -kHalfWidth, -kHalfWidth};
  return grid::UniformGrid::make(dim, ext, 2.0 * kHalfWidth / n, origin);
}

grid::ScalarField sample_rhs(const TestCase& tc, const grid::UniformGrid& g) {
  return grid::sample_radial(g, [&tc](double r) { return tc.rhs(r); }, {0.0, 0.0, 0.0});
}

double reference_potential(const TestCase& tc, double r) {
  const double up = tc.decay_radius();
  const double L = tc.ref_length;
  auto B = [&tc](double s) { return tc.rhs(s); };
  const double tol = 1e-14;
  switch (tc.dim) {
    case 3: {
      const double inner =
          r == 0.0 ? 0.0
                   : specfun::oracle_quadrature([&](double s) { return B(s) * s * s; }, 0.0, r,
                                                tol) / r;
      const double outer =
          r >= up ? 0.0
                  : specfun::oracle_quadrature([&](double s) { return B(s) * s; }, r, up, tol);
      return inner + outer;
    }
    case 2: {
      const double mass =
          r == 0.0 ? 0.0
                   : specfun::oracle_quadrature([&](double s) { return B(s) * s; }, 0.0, r, tol);
      const double near = r == 0.0 ? 0.0 : -std::log(r / L) * mass;
      const double far =
          r >= up ? 0.0
                  : -specfun::oracle_quadrature(
                        [&](double s) { return B(s) * s * std::log(s / L); }, r, up, tol);
      return near + far;
    }
    default: {
      const double mass =
          r == 0.0 ? 0.0 : specfun::oracle_quadrature(B, 0.0, r, tol);
      const double near = -(r - L) * mass;
      const double far =
          r >= up ? 0.0
                  : -specfun::oracle_quadrature([&](double s) { return B(s) * (s - L); }, r, up,
                                                tol);
      return near + far;
    }
  }
}

grid::ScalarField reference_field(const TestCase& tc, const grid::UniformGrid& g) {
  std::map<double, double> memo;
  return grid::sample_radial(
      g,
      [&](double r) {
        auto it = memo.find(r);
        if (it != memo.end()) return it->second;
        const double v = reference_potential(tc, r);
        memo.emplace(r, v);
        return v;
      },
      {0.0, 0.0, 0.0});
}

double point_vortex_speed(double sigma, double ref_length, double r, bool regularized) {
  if (regularized) {
    const auto k = kernels::RadialKernel::make(2, sigma, ref_length);
    return kernels::greens_gradient_radial(k, r);
  }
  return r == 0.0 ? 0.0 : 1.0 / (2.0 * nsgf::pi * r);
}

}  // namespace nsgf::harness
