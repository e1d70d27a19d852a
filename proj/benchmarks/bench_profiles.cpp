#include <benchmark/benchmark.h>

#include "isoprofile/claims.hpp"
#include "isoprofile/cylinder.hpp"
#include "isoprofile/sphere.hpp"

using namespace isoprofile;

static void BM_CylinderFamilyBuild(benchmark::State& state) {
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cylinder_family(3, {.eta_grid = grid}));
}
BENCHMARK(BM_CylinderFamilyBuild)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_CylinderProfile(benchmark::State& state) {
  const ProfileFn p = cylinder_profile(3, 2.0);
  double v = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p(v));
    v = v < 60.0 ? v + 0.37 : 1.0;
  }
}
BENCHMARK(BM_CylinderProfile)->Unit(benchmark::kMicrosecond);

static void BM_SphereProfile(benchmark::State& state) {
  const ProfileFn p = sphere_profile(SphereGeometry(5, 7.5));
  double v = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(p(v));
    v = v < 4000.0 ? v + 13.1 : 1.0;
  }
}
BENCHMARK(BM_SphereProfile)->Unit(benchmark::kMicrosecond);

static void BM_DominanceClaim(benchmark::State& state) {
  ProfileFactory factory;
  const ClaimSpec& claim = find_claim("fig1");
  for (auto _ : state) benchmark::DoNotOptimize(run_claim(claim, factory, 2048));
}
BENCHMARK(BM_DominanceClaim)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
