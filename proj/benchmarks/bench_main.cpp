// Microbenchmarks for the hot paths: coefficient batches, Hankel assembly and
// eigen checks, sine probes, and the lambda gap table.

#include <benchmark/benchmark.h>

#include <vector>

#include "g1lp/bigfloat.hpp"
#include "g1lp/coeff_series.hpp"
#include "g1lp/hankel.hpp"
#include "g1lp/sine_probe.hpp"
#include "g1lp/zero_model.hpp"
#include "g1lp/zeta.hpp"

namespace {

using namespace g1lp;

// Pair at +-0.5i over the integer lattice with a symmetric arithmetic arm;
// the standard stress configuration (403 zeros seen by every probe).
ZeroConfig lattice_config() {
  std::vector<Zero> zs = {{0.0, 0.5, 1}, {0.0, -0.5, 1}};
  for (int m = 1; m <= 200; ++m) {
    zs.push_back({static_cast<double>(m), 0.0, 1});
    zs.push_back({static_cast<double>(-m), 0.0, 1});
  }
  TailModel tail;
  tail.kind = TailModel::Kind::ArithmeticReal;
  tail.start = 201.0;
  tail.gap = 1.0;
  tail.symmetric = true;
  return ZeroConfig(std::move(zs), 0, 0.0, tail);
}

void BM_CoefficientsBatch(benchmark::State& state) {
  ZeroConfig cfg = lattice_config();
  int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coefficients_batch(cfg, 0.25, n_max));
  }
}
BENCHMARK(BM_CoefficientsBatch)->Arg(1)->Arg(9)->Arg(19);

void BM_BuildHankel(benchmark::State& state) {
  ZeroConfig cfg = lattice_config();
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_hankel(cfg, 0.25, N));
  }
}
BENCHMARK(BM_BuildHankel)->Arg(1)->Arg(5)->Arg(10);

void BM_PsdCheck(benchmark::State& state) {
  ZeroConfig cfg = lattice_config();
  HankelMatrix m = build_hankel(cfg, 0.25, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(psd_check(m));
  }
}
BENCHMARK(BM_PsdCheck)->Arg(5)->Arg(10);

void BM_SinSqSum(benchmark::State& state) {
  ZeroConfig cfg = lattice_config();
  double t = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sin_sq_sum(cfg, 0.0, t));
  }
}
BENCHMARK(BM_SinSqSum)->Arg(1)->Arg(40);

void BM_TaylorSqSum(benchmark::State& state) {
  ZeroConfig cfg = lattice_config();
  int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(taylor_sq_sum(cfg, 0.0, 2.0, N));
  }
}
BENCHMARK(BM_TaylorSqSum)->Arg(5)->Arg(15);

void BM_LambdaSpacingReport(benchmark::State& state) {
  ZetaZeroTable table;
  table.source = "synthetic";
  std::size_t count = static_cast<std::size_t>(state.range(0));
  table.heights.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    table.heights.push_back(BigFloat(14.1347 + 0.5 * static_cast<double>(k), 128));
  }
  LambdaConfig cfg = to_lambda(table);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lambda_spacing_report(cfg, count));
  }
}
BENCHMARK(BM_LambdaSpacingReport)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
