#include <benchmark/benchmark.h>

#include "crysdef/semidirect.hpp"
#include "crysdef/spherical.hpp"

using namespace crysdef;

static void BM_Snf3x3(benchmark::State& state) {
  const IntMat a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  for (auto _ : state) benchmark::DoNotOptimize(snf(a));
}
BENCHMARK(BM_Snf3x3);

static void BM_FClassesHexagonal(benchmark::State& state) {
  const auto hex = PointGroup2D::named(Lattice::Hexagonal);
  for (auto _ : state)
    for (Int n3 = 0; n3 < 6; ++n3) benchmark::DoNotOptimize(f_classes(hex, n3));
}
BENCHMARK(BM_FClassesHexagonal);

static void BM_BruteForceOracle(benchmark::State& state) {
  const auto sq = PointGroup2D::named(Lattice::Square);
  const Int window = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_classes(sq, 2, window));
}
BENCHMARK(BM_BruteForceOracle)->Arg(3)->Arg(6);

static void BM_BinaryIcosahedralClasses(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(build_group(BinaryKind::icosahedral())));
}
BENCHMARK(BM_BinaryIcosahedralClasses);
BENCHMARK_MAIN();
