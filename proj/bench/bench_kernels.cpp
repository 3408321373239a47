// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "gstruve/grid.hpp"
#include "gstruve/parallel.hpp"
#include "gstruve/radii.hpp"
#include "gstruve/verify.hpp"

namespace {

using namespace gstruve;

std::vector<double> abscissae(int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = 20.0 * (i + 1) / n;
  return xs;
}

const StruveParams kParams = StruveParams::make(2, 0.5, 1, 1, 1);

void BM_EvalBatch(benchmark::State& state) {
  const auto xs = abscissae(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_w_batch(kParams, xs, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_EvalBatchSerial(benchmark::State& state) {
  const auto xs = abscissae(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_w_batch_serial(kParams, xs, 1));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

double starlike_g(const StruveParams& p) { return solve_radius({p, RadiusKind::Starlike, Normalization::G, 0.0}).value; }

void BM_GridRadii(benchmark::State& state) {
  const auto grid = default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(map_grid<double>(grid, starlike_g));
}

void BM_GridRadiiSerial(benchmark::State& state) {
  const auto grid = default_grid();
  for (auto _ : state) benchmark::DoNotOptimize(map_grid_serial<double>(grid, starlike_g));
}

void BM_VerifySandwich(benchmark::State& state) {
  const auto grid = default_grid();
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(Suite::Sandwich, grid, parallel));
}

}  // namespace

BENCHMARK(BM_EvalBatch)->Arg(256)->Arg(4096);
BENCHMARK(BM_EvalBatchSerial)->Arg(256)->Arg(4096);
BENCHMARK(BM_GridRadii)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridRadiiSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySandwich)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
