#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <random>

#include "doctest.h"
#include "nsgf/constants.hpp"
#include "nsgf/kernels.hpp"
#include "nsgf/transform.hpp"

using namespace nsgf;
using grid::ScalarField;
using grid::UniformGrid;
using transform::SpectralBuffer;

namespace {

// O(N^2) reference DFT, one axis at a time.
void naive_dft_axis(std::vector<std::complex<double>>& data, int dim,
                    const std::array<int, 3>& ext, int axis, bool inverse) {
  std::array<std::size_t, 3> stride{1, 1, 1};
  for (int a = dim - 2; a >= 0; --a) stride[a] = stride[a + 1] * ext[a + 1];
  const int n = ext[axis];
  const std::size_t s = stride[axis];
  const std::size_t lines = data.size() / n;
  std::vector<std::complex<double>> line(n), out(n);
  for (std::size_t l = 0; l < lines; ++l) {
    const std::size_t inner = l % s, outer = l / s;
    const std::size_t base = outer * s * n + inner;
    for (int k = 0; k < n; ++k) line[k] = data[base + k * s];
    for (int k = 0; k < n; ++k) {
      std::complex<double> acc = 0.0;
      for (int j = 0; j < n; ++j) {
        const double ang = (inverse ? 2.0 : -2.0) * pi * k * j / n;
        acc += line[j] * std::complex<double>(std::cos(ang), std::sin(ang));
      }
      out[k] = inverse ? acc / static_cast<double>(n) : acc;
    }
    for (int k = 0; k < n; ++k) data[base + k * s] = out[k];
  }
}

void naive_dft(std::vector<std::complex<double>>& data, int dim, const std::array<int, 3>& ext,
               bool inverse) {
  for (int a = 0; a < dim; ++a) naive_dft_axis(data, dim, ext, a, inverse);
}

ScalarField greens_table(const UniformGrid& g, const kernels::RadialKernel& k) {
  std::array<int, 3> dext{1, 1, 1};
  for (int a = 0; a < g.dim; ++a) dext[a] = 2 * g.extents[a];
  const auto tg = UniformGrid::make(g.dim, dext, g.spacing, g.origin);
  ScalarField table = ScalarField::zeros(tg);
  for (std::size_t i = 0; i < table.values.size(); ++i) {
    const auto idx = tg.multi_index(i);
    double r2 = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      const int n = g.extents[a];
      const double d = g.spacing * (idx[a] <= n ? idx[a] : idx[a] - 2 * n);
      r2 += d * d;
    }
    table.values[i] = kernels::greens(k, std::sqrt(r2));
  }
  return table;
}

ScalarField direct_convolution(const ScalarField& src, const kernels::RadialKernel& k) {
  const auto& g = src.grid;
  ScalarField out = ScalarField::zeros(g);
  double hpow = 1.0;
  for (int a = 0; a < g.dim; ++a) hpow *= g.spacing;
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const auto idx = g.multi_index(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < src.values.size(); ++j) {
      if (src.values[j] == 0.0) continue;
      const auto jdx = g.multi_index(j);
      double r2 = 0.0;
      for (int a = 0; a < g.dim; ++a) {
        const double d = g.spacing * (idx[a] - jdx[a]);
        r2 += d * d;
      }
      acc += kernels::greens(k, std::sqrt(r2)) * src.values[j];
    }
    out.values[i] = hpow * acc;
  }
  return out;
}

}  // namespace

TEST_CASE("buffer construction enforces powers of two") {
  CHECK_THROWS_AS(SpectralBuffer::make(1, {6, 1, 1}), std::domain_error);
  CHECK_THROWS_AS(SpectralBuffer::make(2, {8, 12, 1}), std::domain_error);
  const auto b = SpectralBuffer::make(3, {4, 8, 2});
  CHECK(b.size() == 64);
}

TEST_CASE("DC bin and impulse spectra") {
  auto b = SpectralBuffer::make(1, {16, 1, 1});
  for (auto& v : b.data) v = 3.25;
  transform::dft_forward(b);
  CHECK(std::abs(b.data[0] - std::complex<double>(3.25 * 16, 0.0)) < 1e-13);
  for (int i = 1; i < 16; ++i) CHECK(std::abs(b.data[i]) < 1e-13);

  auto u = SpectralBuffer::make(1, {16, 1, 1});
  u.data[0] = 1.0;
  transform::dft_forward(u);
  for (int i = 0; i < 16; ++i) CHECK(std::abs(u.data[i] - 1.0) < 1e-14);
}

TEST_CASE("fft matches the naive DFT oracle") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  struct Shape {
    int dim;
    std::array<int, 3> ext;
  };
  for (const auto& s : {Shape{1, {64, 1, 1}}, Shape{2, {16, 8, 1}}, Shape{3, {8, 4, 8}}}) {
    auto b = SpectralBuffer::make(s.dim, s.ext);
    std::vector<std::complex<double>> ref(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      b.data[i] = {dist(rng), dist(rng)};
      ref[i] = b.data[i];
    }
    const auto orig = b.data;
    transform::dft_forward(b);
    naive_dft(ref, s.dim, b.extents, false);
    double scale = 0.0, worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) scale = std::max(scale, std::abs(ref[i]));
    for (std::size_t i = 0; i < b.size(); ++i)
      worst = std::max(worst, std::abs(b.data[i] - ref[i]));
    CHECK(worst / scale < 1e-13);

    transform::dft_inverse(b);
    worst = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i)
      worst = std::max(worst, std::abs(b.data[i] - orig[i]));
    CHECK(worst < 1e-13);  // round trip with 1/N on the inverse
  }
}

TEST_CASE("convolution identities") {
  const auto g = UniformGrid::make(3, {8, 8, 8}, 0.25, {-1.0, -1.0, -1.0});
  const auto k = kernels::RadialKernel::make(3, kernels::sigma_from_spacing(0.25), 3.0);
  const auto table = greens_table(g, k);

  SUBCASE("zero source gives zero") {
    const auto out = transform::convolve_free_space(ScalarField::zeros(g), table);
    for (double v : out.values) CHECK(std::abs(v) < 1e-15);
  }

  SUBCASE("impulse reproduces the recentered kernel table") {
    ScalarField src = ScalarField::zeros(g);
    const std::array<int, 3> p{2, 5, 3};
    src.values[g.flat_index(p)] = 1.0 / (0.25 * 0.25 * 0.25);
    const auto out = transform::convolve_free_space(src, table);
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      const auto idx = g.multi_index(i);
      double r2 = 0.0;
      for (int a = 0; a < 3; ++a) {
        const double d = 0.25 * (idx[a] - p[a]);
        r2 += d * d;
      }
      CHECK(std::abs(out.values[i] - kernels::greens(k, std::sqrt(r2))) < 1e-12);
    }
  }

  SUBCASE("two impulses match the direct O(N^2) sum") {
    ScalarField src = ScalarField::zeros(g);
    src.values[g.flat_index({1, 1, 6})] = 2.0;
    src.values[g.flat_index({6, 3, 2})] = -1.0;
    const auto out = transform::convolve_free_space(src, table);
    const auto want = direct_convolution(src, k);
    double scale = 0.0;
    for (double v : want.values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < out.values.size(); ++i)
      CHECK(std::abs(out.values[i] - want.values[i]) <= 1e-12 * scale);
  }

  SUBCASE("extent mismatch is rejected") {
    const auto bad = UniformGrid::make(3, {12, 16, 16}, 0.25, {-1, -1, -1});
    CHECK_THROWS_AS(transform::convolve_free_space(ScalarField::zeros(g),
                                                   ScalarField::zeros(bad)),
                    std::domain_error);
  }
}

TEST_CASE("convolution is linear") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const auto g = UniformGrid::make(3, {16, 16, 16}, 0.125, {-1.0, -1.0, -1.0});
  const auto k = kernels::RadialKernel::make(3, kernels::sigma_from_spacing(0.125), 3.0);
  const auto table = greens_table(g, k);
  ScalarField a = ScalarField::zeros(g), b = ScalarField::zeros(g);
  for (auto& v : a.values) v = dist(rng);
  for (auto& v : b.values) v = dist(rng);
  const double alpha = 1.7, beta = -0.4;
  ScalarField combo = ScalarField::zeros(g);
  for (std::size_t i = 0; i < combo.values.size(); ++i)
    combo.values[i] = alpha * a.values[i] + beta * b.values[i];
  const auto ca = transform::convolve_free_space(a, table);
  const auto cb = transform::convolve_free_space(b, table);
  const auto cc = transform::convolve_free_space(combo, table);
  double scale = 0.0;
  for (double v : cc.values) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < cc.values.size(); ++i)
    CHECK(std::abs(cc.values[i] - (alpha * ca.values[i] + beta * cb.values[i])) <=
          1e-12 * scale);
}

TEST_CASE("aperiodicity: corner and center sources both match the direct sum") {
  const auto g = UniformGrid::make(3, {8, 8, 8}, 0.25, {-1.0, -1.0, -1.0});
  const auto k = kernels::RadialKernel::make(3, kernels::sigma_from_spacing(0.25), 3.0);
  const auto table = greens_table(g, k);
  for (const auto& at : {std::array<int, 3>{0, 0, 0}, std::array<int, 3>{7, 7, 7},
                         std::array<int, 3>{4, 4, 4}}) {
    ScalarField src = ScalarField::zeros(g);
    src.values[g.flat_index(at)] = 1.0;
    const auto out = transform::convolve_free_space(src, table);
    const auto want = direct_convolution(src, k);
    double scale = 0.0, worst = 0.0;
    for (double v : want.values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 0; i < out.values.size(); ++i)
      worst = std::max(worst, std::abs(out.values[i] - want.values[i]));
    CHECK(worst <= 1e-12 * scale);
  }
}
