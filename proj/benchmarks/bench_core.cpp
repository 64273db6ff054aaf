#include <benchmark/benchmark.h>

#include "htoric/chow.hpp"
#include "htoric/exact.hpp"
#include "htoric/orbifold.hpp"
#include "htoric/sampling.hpp"
#include "htoric/verifiers.hpp"

namespace {

using namespace htoric;

void BM_Snf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m = random_matrix(7, n, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(4)->Arg(8)->Arg(16);

void BM_CokernelElements(benchmark::State& state) {
  IntMatrix m{{4, 1, 0}, {0, 6, 2}, {1, 0, 5}};
  for (auto _ : state) benchmark::DoNotOptimize(cokernel_torsion_elements(m));
}
BENCHMARK(BM_CokernelElements);

void BM_GradedPieces(benchmark::State& state) {
  StackModel y = make_lawrence_model(IntMatrix{{1, 1, 2}}, IntVector{Integer(1)});
  const auto top = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    GradedRingPresentation pres = presentation(y, top);
    for (unsigned k = 0; k <= top; ++k) benchmark::DoNotOptimize(graded_group(pres, k).invariants());
  }
}
BENCHMARK(BM_GradedPieces)->Arg(4)->Arg(8);

void BM_OrbifoldTable(benchmark::State& state) {
  StackModel y = make_hypertoric_model(IntMatrix{{1, 2}}, IntVector{Integer(1)});
  for (auto _ : state) benchmark::DoNotOptimize(orbifold_table(y, 4));
}
BENCHMARK(BM_OrbifoldTable);

void BM_VerifyCharts(benchmark::State& state) {
  IntMatrix a{{1, 1, 0}, {0, 1, 2}};
  IntVector theta{Integer(1), Integer(3)};
  for (auto _ : state) benchmark::DoNotOptimize(verify_charts(a, theta, 20, 1));
}
BENCHMARK(BM_VerifyCharts);

}  // namespace

BENCHMARK_MAIN();
