#pragma once

// Uniform isotropic mesh and sampled field containers shared by the
// solver and the harness. Fields are plain value-semantics containers;
// concurrent reads are safe, there is no internal locking.

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace nsgf::grid {

/// d-dimensional uniform isotropic mesh. Sample i = (i1..id) sits at
/// origin + h * i, reproducibly bit-exact. Row-major storage with the
/// last axis fastest.
struct UniformGrid {
  int dim = 0;
  std::array<int, 3> extents{0, 0, 0};
  double spacing = 0.0;
  std::array<double, 3> origin{0.0, 0.0, 0.0};

  static UniformGrid make(int dim, std::array<int, 3> extents, double spacing,
                          std::array<double, 3> origin);

  std::size_t sample_count() const;
  std::size_t flat_index(std::array<int, 3> idx) const;
  std::array<int, 3> multi_index(std::size_t flat) const;
  std::array<double, 3> position(std::array<int, 3> idx) const;

  bool operator==(const UniformGrid&) const = default;
};

struct ScalarField {
  UniformGrid grid;
  std::vector<double> values;

  static ScalarField zeros(const UniformGrid& g);
};

struct VectorField {
  UniformGrid grid;
  int components = 0;
  std::array<std::vector<double>, 3> component;

  static VectorField zeros(const UniformGrid& g, int components);
};

/// Samples f(|x - center|) at every grid point. A non-finite sample value
/// raises std::runtime_error naming the offending flat index.
ScalarField sample_radial(const UniformGrid& g, const std::function<double(double)>& f,
                          std::array<double, 3> center);

struct Norms {
  double linf;
  double l2;  // sqrt(h^dim * sum of squared differences)
};

/// Error norms between two fields on the same grid.
Norms norms(const ScalarField& a, const ScalarField& b);

}  // namespace nsgf::grid
