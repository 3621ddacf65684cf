#include "nsgf/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "nsgf/constants.hpp"

namespace nsgf::transform {
namespace {

bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

// Twiddle table: w[j] = exp(-2 pi i j / n), j < n/2.
std::vector<std::complex<double>> twiddles(int n, bool inverse) {
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n / 2));
  const double sign = inverse ? 1.0 : -1.0;
  for (int j = 0; j < n / 2; ++j) {
    const double ang = sign * 2.0 * pi * j / n;
    w[j] = {std::cos(ang), std::sin(ang)};
  }
  return w;
}

// In-place iterative radix-2 on a contiguous line.
void fft_line(std::complex<double>* a, int n, const std::vector<std::complex<double>>& w) {
  // bit-reversal permutation
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int stride = n / len;
    for (int i = 0; i < n; i += len) {
      for (int k = 0; k < len / 2; ++k) {
        const std::complex<double> t = a[i + k + len / 2] * w[static_cast<std::size_t>(k) * stride];
        a[i + k + len / 2] = a[i + k] - t;
        a[i + k] += t;
      }
    }
  }
}

void transform_axes(SpectralBuffer& buf, bool inverse) {
  const int d = buf.dim;
  const auto& ext = buf.extents;
  // strides, row-major with last axis fastest
  std::array<std::size_t, 3> stride{1, 1, 1};
  for (int a = d - 2; a >= 0; --a)
    stride[a] = stride[a + 1] * static_cast<std::size_t>(ext[a + 1]);

  std::vector<std::complex<double>> line;
  for (int axis = 0; axis < d; ++axis) {
    const int n = ext[axis];
    if (n == 1) continue;
    const auto w = twiddles(n, inverse);
    line.resize(static_cast<std::size_t>(n));
    const std::size_t s = stride[axis];
    const std::size_t total = buf.size();
    const std::size_t line_count = total / static_cast<std::size_t>(n);
    // Enumerate line origins: all flat indices whose coordinate along
    // `axis` is zero.
    for (std::size_t l = 0; l < line_count; ++l) {
      // decompose l into (outer, inner) around the axis
      const std::size_t inner = l % s;
      const std::size_t outer = l / s;
      const std::size_t base = outer * s * static_cast<std::size_t>(n) + inner;
      if (s == 1) {
        fft_line(buf.data.data() + base, n, w);
      } else {
        for (int k = 0; k < n; ++k) line[static_cast<std::size_t>(k)] = buf.data[base + k * s];
        fft_line(line.data(), n, w);
        for (int k = 0; k < n; ++k) buf.data[base + k * s] = line[static_cast<std::size_t>(k)];
      }
    }
  }
  if (inverse) {
    const double scale = 1.0 / static_cast<double>(buf.size());
    for (auto& v : buf.data) v *= scale;
  }
}

}  // namespace

SpectralBuffer SpectralBuffer::make(int dim, std::array<int, 3> extents) {
  if (dim < 1 || dim > 3) throw std::domain_error("SpectralBuffer: dim must be 1, 2 or 3");
  SpectralBuffer b;
  b.dim = dim;
  for (int a = 0; a < 3; ++a) {
    const int n = a < dim ? extents[a] : 1;
    if (a < dim && !is_power_of_two(n))
      throw std::domain_error("SpectralBuffer: extents must be powers of two");
    b.extents[a] = n;
  }
  b.data.assign(b.size(), {0.0, 0.0});
  return b;
}

std::size_t SpectralBuffer::size() const {
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(extents[a]);
  return n;
}

void dft_forward(SpectralBuffer& buffer) { transform_axes(buffer, false); }
void dft_inverse(SpectralBuffer& buffer) { transform_axes(buffer, true); }

grid::ScalarField convolve_free_space(const grid::ScalarField& source,
                                      const grid::ScalarField& kernel_table) {
  const auto& g = source.grid;
  const auto& tg = kernel_table.grid;
  if (tg.dim != g.dim) throw std::domain_error("convolve_free_space: dimension mismatch");
  for (int a = 0; a < g.dim; ++a)
    if (tg.extents[a] != 2 * g.extents[a])
      throw std::domain_error("convolve_free_space: kernel table extents must be doubled");

  SpectralBuffer src = SpectralBuffer::make(g.dim, tg.extents);
  SpectralBuffer ker = SpectralBuffer::make(g.dim, tg.extents);

  // zero-padded embedding of the source into the doubled domain
  const std::size_t n_src = g.sample_count();
  for (std::size_t i = 0; i < n_src; ++i) {
    const auto idx = g.multi_index(i);
    src.data[tg.flat_index(idx)] = source.values[i];
  }
  for (std::size_t i = 0; i < kernel_table.values.size(); ++i)
    ker.data[i] = kernel_table.values[i];

  dft_forward(src);
  dft_forward(ker);
  for (std::size_t i = 0; i < src.data.size(); ++i) src.data[i] *= ker.data[i];
  dft_inverse(src);

  double hpow = 1.0;
  for (int a = 0; a < g.dim; ++a) hpow *= g.spacing;

  grid::ScalarField out = grid::ScalarField::zeros(g);
  for (std::size_t i = 0; i < n_src; ++i) {
    const auto idx = g.multi_index(i);
    out.values[i] = hpow * src.data[tg.flat_index(idx)].real();
  }
  return out;
}

}  // namespace nsgf::transform
