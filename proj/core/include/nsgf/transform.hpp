#pragma once

// Discrete Fourier transforms and the doubled-domain (Hockney-style)
// free-space convolution. The transform is an in-repo iterative radix-2
// routine; extents must be powers of two, enforced at construction. The
// forward transform is unnormalized, the inverse carries 1/N.
//
// Transforms of distinct buffers may run concurrently; the routines keep
// no global mutable state and accumulate in a fixed order.

#include <array>
#include <complex>
#include <vector>

#include "nsgf/grid.hpp"

namespace nsgf::transform {

/// Complex workspace on (typically doubled) extents, row-major, last axis
/// fastest.
struct SpectralBuffer {
  int dim = 0;
  std::array<int, 3> extents{1, 1, 1};
  std::vector<std::complex<double>> data;

  static SpectralBuffer make(int dim, std::array<int, 3> extents);
  std::size_t size() const;
};

void dft_forward(SpectralBuffer& buffer);
void dft_inverse(SpectralBuffer& buffer);

/// Free-space (aperiodic) convolution of `source` with a kernel table
/// sampled on the doubled grid: extents twice the source's per axis, same
/// spacing. Table entry at multi-index i holds the kernel at the signed
/// per-axis offset  h * (i_a <= n_a ? i_a : i_a - 2 n_a).
/// Returns h^dim * sum_j kernel(x_i - x_j) source(x_j) on the source grid.
grid::ScalarField convolve_free_space(const grid::ScalarField& source,
                                      const grid::ScalarField& kernel_table);

}  // namespace nsgf::transform
