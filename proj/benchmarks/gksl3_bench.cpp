#include <benchmark/benchmark.h>

#include "gksl3/gamma.hpp"
#include "gksl3/module.hpp"
#include "gksl3/su2.hpp"

using namespace gksl3;

static void BM_InjectorCoeffs(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int m = -2; m <= 2; ++m) {
      if (!component_exists(l, m)) continue;
      for (int k = 0; k <= l + 2 * m; ++k) {
        for (int i = 0; i <= 4; ++i) {
          benchmark::DoNotOptimize(cg_a(l, m, k, i));
        }
      }
    }
  }
}
BENCHMARK(BM_InjectorCoeffs)->Arg(40)->Arg(200);

static void BM_GammaMatrixSymbolic(benchmark::State& state) {
  const SeriesParams sp = SeriesParams::p0(0, 0);
  const int l = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_matrix(sp, l, 1));
  }
}
BENCHMARK(BM_GammaMatrixSymbolic)->Arg(8)->Arg(24);

static void BM_ActPSymbolic(benchmark::State& state) {
  const SeriesParams sp = SeriesParams::p0(0, 0);
  const int l = static_cast<int>(state.range(0));
  const Truncation tr{l + 2};
  const ModuleVector v = ModuleVector::basis(sp, l, 0, l / 2);
  for (auto _ : state) {
    for (int r = 0; r <= 4; ++r) {
      benchmark::DoNotOptimize(act_p(sp, r, v, tr));
    }
  }
}
BENCHMARK(BM_ActPSymbolic)->Arg(6)->Arg(12);

static void BM_ActPCached(benchmark::State& state) {
  const SeriesParams sp = SeriesParams::p0(0, 0);
  const int l = static_cast<int>(state.range(0));
  const ActPCache cache(sp, l + 2);
  const ModuleVector v = ModuleVector::basis(sp, l, 0, l / 2);
  for (auto _ : state) {
    for (int r = 0; r <= 4; ++r) {
      benchmark::DoNotOptimize(cache.apply(r, v));
    }
  }
}
BENCHMARK(BM_ActPCached)->Arg(6)->Arg(12);

static void BM_VerifyBracketsNumeric(benchmark::State& state) {
  const auto values = seeded_gaussian_rationals(42, 2);
  const SeriesParams sp =
      SeriesParams::p0(0, 0, Scalar(values[0]), Scalar(values[1]));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_brackets(sp, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VerifyBracketsNumeric)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
