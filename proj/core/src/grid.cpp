#include "nsgf/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace nsgf::grid {

UniformGrid UniformGrid::make(int dim, std::array<int, 3> extents, double spacing,
                              std::array<double, 3> origin) {
  if (dim < 1 || dim > 3) throw std::domain_error("UniformGrid: dim must be 1, 2 or 3");
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw std::domain_error("UniformGrid: spacing must be positive and finite");
  for (int a = 0; a < dim; ++a) {
    if (extents[a] < 4) throw std::domain_error("UniformGrid: extents must be >= 4");
    if (!std::isfinite(origin[a])) throw std::domain_error("UniformGrid: origin must be finite");
  }
  UniformGrid g;
  g.dim = dim;
  g.spacing = spacing;
  for (int a = 0; a < 3; ++a) {
    g.extents[a] = a < dim ? extents[a] : 1;
    g.origin[a] = a < dim ? origin[a] : 0.0;
  }
  return g;
}

std::size_t UniformGrid::sample_count() const {
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(extents[a]);
  return n;
}

std::size_t UniformGrid::flat_index(std::array<int, 3> idx) const {
  std::size_t flat = 0;
  for (int a = 0; a < dim; ++a) flat = flat * extents[a] + static_cast<std::size_t>(idx[a]);
  return flat;
}

std::array<int, 3> UniformGrid::multi_index(std::size_t flat) const {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % extents[a]);
    flat /= extents[a];
  }
  return idx;
}

std::array<double, 3> UniformGrid::position(std::array<int, 3> idx) const {
  std::array<double, 3> p{0.0, 0.0, 0.0};
  for (int a = 0; a < dim; ++a) p[a] = origin[a] + spacing * idx[a];
  return p;
}

ScalarField ScalarField::zeros(const UniformGrid& g) {
  return {g, std::vector<double>(g.sample_count(), 0.0)};
}

VectorField VectorField::zeros(const UniformGrid& g, int components) {
  VectorField f;
  f.grid = g;
  f.components = components;
  for (int c = 0; c < components; ++c)
    f.component[c].assign(g.sample_count(), 0.0);
  return f;
}

ScalarField sample_radial(const UniformGrid& g, const std::function<double(double)>& f,
                          std::array<double, 3> center) {
  ScalarField out = ScalarField::zeros(g);
  const std::size_t n = g.sample_count();
  for (std::size_t i = 0; i < n; ++i) {
    const auto idx = g.multi_index(i);
    const auto pos = g.position(idx);
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const double d = pos[a] - center[a];
      r2 += d * d;
    }
    const double v = f(std::sqrt(r2));
    if (!std::isfinite(v))
      throw std::runtime_error("sample_radial: non-finite sample at flat index " +
                               std::to_string(i));
    out.values[i] = v;
  }
  return out;
}

Norms norms(const ScalarField& a, const ScalarField& b) {
  if (!(a.grid == b.grid)) throw std::domain_error("norms: fields live on different grids");
  double linf = 0.0, ss = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = std::abs(a.values[i] - b.values[i]);
    if (d > linf) linf = d;
    ss += d * d;
  }
  double hpow = 1.0;
  for (int k = 0; k < a.grid.dim; ++k) hpow *= a.grid.spacing;
  return {linf, std::sqrt(hpow * ss)};
}

}  // namespace nsgf::grid
