// Microbenchmarks for the sparse pipeline and the dense baseline.
//
// The sparse group is expected to scale linearly in m; the dense group is
// kept small because Cholesky of the full covariance is cubic.

#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "ar1band/banded.hpp"
#include "ar1band/dense.hpp"
#include "ar1band/density.hpp"
#include "ar1band/precision.hpp"
#include "ar1band/rng.hpp"
#include "ar1band/sampling.hpp"

namespace {

using namespace ar1band;

TimeGrid make_grid(std::int64_t m) {
  // Varied gaps; cost depends only on m.
  static constexpr std::int64_t gaps[] = {1, 2, 3, 5, 8};
  std::vector<std::int64_t> times(static_cast<std::size_t>(m));
  std::int64_t t = 0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    times[i] = t;
    t += gaps[i % 5];
  }
  return TimeGrid(std::move(times));
}

const Ar1Params kParams(0.7, 1.0);

void BM_BuildPrecision(benchmark::State& state) {
  const TimeGrid grid = make_grid(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_precision(kParams, grid));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildPrecision)->Range(1 << 8, 1 << 20)->Complexity();

void BM_BandCholesky(benchmark::State& state) {
  const TimeGrid grid = make_grid(state.range(0));
  const TridiagSym q = build_precision(kParams, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(band_cholesky(q));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BandCholesky)->Range(1 << 8, 1 << 20)->Complexity();

void BM_LogDensity(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const TimeGrid grid = make_grid(state.range(0));
  const MeanSpec mean(0.0);
  const std::vector<double> x(m, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_density(kParams, grid, mean, x));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogDensity)->Range(1 << 8, 1 << 20)->Complexity();

void BM_SampleUnconditional(benchmark::State& state) {
  const TimeGrid grid = make_grid(state.range(0));
  const MeanSpec mean(0.0);
  StdNormalSource rng(991);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample_unconditional(kParams, grid, mean, rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SampleUnconditional)->Range(1 << 8, 1 << 20)->Complexity();

void BM_ConditionalDraw(benchmark::State& state) {
  // k predicted points given m observed; draw cost is O(k + m + km).
  const std::int64_t m = state.range(0);
  const std::int64_t k = 64;
  std::vector<std::int64_t> obs_times(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) obs_times[i] = 2 * i;
  std::vector<std::int64_t> pred_times(static_cast<std::size_t>(k));
  for (std::int64_t i = 0; i < k; ++i) pred_times[i] = 2 * i + 1;
  const std::vector<double> x_o(static_cast<std::size_t>(m), 0.3);
  const ConditionalProblem problem(kParams, TimeGrid(std::move(obs_times)),
                                   TimeGrid(std::move(pred_times)),
                                   MeanSpec(0.0), MeanSpec(0.0), x_o);
  const ConditionalSampler sampler(problem, 1u << 26);
  StdNormalSource rng(991);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampler.draw(rng));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConditionalDraw)->Range(1 << 8, 1 << 16)->Complexity();

void BM_DenseLogPdf(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const TimeGrid grid = make_grid(state.range(0));
  const std::vector<double> mu(m, 0.0);
  const std::vector<double> x(m, 0.5);
  const DenseMat cov = build_covariance(kParams, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dense_log_pdf(mu, cov, x));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseLogPdf)->Range(1 << 6, 1 << 11)->Complexity();

}  // namespace

BENCHMARK_MAIN();
