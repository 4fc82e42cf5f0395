#include <benchmark/benchmark.h>

#include "crystal/continuous.hpp"
#include "crystal/demazure.hpp"
#include "crystal/identity.hpp"
#include "crystal/ls_path.hpp"
#include "crystal/matrix.hpp"

using namespace crystal;

static void BM_EnumerateCrystal(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Partition lambda({3, 2, 1}, n);
  for (auto _ : state) {
    auto set = enumerate_crystal(lambda, n);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_EnumerateCrystal)->Arg(3)->Arg(4);

static void BM_KernelSeries(benchmark::State& state) {
  const KernelSpec spec{3, KernelSpec::Support::lower, static_cast<int>(state.range(0))};
  for (auto _ : state) {
    auto p = kernel_series(spec);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_KernelSeries)->Arg(4)->Arg(6);

static void BM_RhsSum(benchmark::State& state) {
  for (auto _ : state) {
    auto p = rhs_sum(2, static_cast<int>(state.range(0)), Variant::lower_khat_k);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_RhsSum)->Arg(4)->Arg(6);

static void BM_ClassifyLow(benchmark::State& state) {
  const auto matrices = all_matrices(3, state.range(0), /*lower_only=*/true);
  for (auto _ : state) {
    for (const auto& m : matrices) {
      auto cls = classify_low(m);
      benchmark::DoNotOptimize(cls);
    }
  }
  state.SetItemsProcessed(state.iterations() * matrices.size());
}
BENCHMARK(BM_ClassifyLow)->Arg(2)->Arg(3);

static void BM_PsiRoundTrip(benchmark::State& state) {
  const Partition lambda({3, 2, 0}, 3);
  const auto tabs = enumerate_crystal(lambda, 3);
  for (auto _ : state) {
    for (const auto& t : tabs) {
      auto back = psi_inv(psi(t, lambda));
      benchmark::DoNotOptimize(back);
    }
  }
  state.SetItemsProcessed(state.iterations() * tabs.size());
}
BENCHMARK(BM_PsiRoundTrip);

static void BM_ContinuousOp(benchmark::State& state) {
  const RatMatrix m = RatMatrix::parse("1/2,0,0;1/3,1/4,0;0,2/3,1");
  const PLPath path = build_pi_M(m);
  for (auto _ : state) {
    auto moved = cont_op(path, 1, Rat(-1, 3));
    benchmark::DoNotOptimize(moved);
  }
}
BENCHMARK(BM_ContinuousOp);

BENCHMARK_MAIN();
