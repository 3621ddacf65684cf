#include <benchmark/benchmark.h>

#include <cmath>

#include "nsgf/harness.hpp"
#include "nsgf/kernels.hpp"
#include "nsgf/solver.hpp"
#include "nsgf/specfun.hpp"
#include "nsgf/transform.hpp"

using namespace nsgf;

namespace {

void BM_SineIntegral(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::sine_integral(x));
}
BENCHMARK(BM_SineIntegral)->Arg(1)->Arg(8)->Arg(100);

void BM_BesselJ0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_j(0.0, x));
}
BENCHMARK(BM_BesselJ0)->Arg(1)->Arg(15)->Arg(400);

void BM_Ji0(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::bessel_integral_ji0(x));
}
BENCHMARK(BM_Ji0)->Arg(5)->Arg(30)->Arg(200);

void BM_GreensEval(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto k = kernels::RadialKernel::make(dim, 0.01, 3.0);
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::greens(k, r));
    r = r < 0.2 ? r + 1e-4 : 0.0;
  }
}
BENCHMARK(BM_GreensEval)->Arg(1)->Arg(2)->Arg(3);

void BM_Fft3d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto buf = transform::SpectralBuffer::make(3, {n, n, n});
  for (std::size_t i = 0; i < buf.data.size(); ++i)
    buf.data[i] = std::sin(0.37 * static_cast<double>(i));
  for (auto _ : state) {
    transform::dft_forward(buf);
    transform::dft_inverse(buf);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(buf.size()));
}
BENCHMARK(BM_Fft3d)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_BuildPlan3d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto g = harness::make_grid(3, n);
  for (auto _ : state) benchmark::DoNotOptimize(solver::build_plan(g, 3.0, true));
}
BENCHMARK(BM_BuildPlan3d)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_SolvePoisson3d(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto tc = harness::TestCase::make(3, harness::RhsKind::gaussian);
  const auto g = harness::make_grid(3, n);
  const auto plan = solver::build_plan(g, 3.0, true);
  const auto B = harness::sample_rhs(tc, g);
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve_poisson(plan, B));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.sample_count()));
}
BENCHMARK(BM_SolvePoisson3d)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
