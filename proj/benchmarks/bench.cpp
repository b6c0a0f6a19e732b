#include <benchmark/benchmark.h>

#include <cmath>

#include "vortexlab/cutoff.hpp"
#include "vortexlab/norms.hpp"
#include "vortexlab/profiles.hpp"
#include "vortexlab/solver.hpp"
#include "vortexlab/spectral.hpp"

namespace {

using namespace vortexlab;

const RadialCutoff kCut{1.0, 2.0};

ScalarField dipole(const Grid& g) {
  return sample(
      [](Vec2 x) {
        const double r2 = x.x * x.x + x.y * x.y;
        return -0.5 * x.x * std::exp(-r2 / 4.0);
      },
      g);
}

void BM_BiotSavart(benchmark::State& state) {
  const Grid g(int(state.range(0)), 40.0);
  const ScalarField w = dipole(g);
  (void)biot_savart(w);  // warm the plan cache
  for (auto _ : state) benchmark::DoNotOptimize(biot_savart(w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BiotSavart)->Arg(128)->Arg(256)->Arg(512)->Complexity();

void BM_SolverStep(benchmark::State& state) {
  SolverConfig cfg;
  cfg.grid = Grid(int(state.range(0)), 40.0);
  cfg.cutoff = kCut;
  cfg.dt = 0.01;
  cfg.params.alpha = 1.0;
  SolverState s{0.0, dipole(cfg.grid)};
  s = step(s, cfg);  // warm caches
  for (auto _ : state) benchmark::DoNotOptimize(step(s, cfg));
}
BENCHMARK(BM_SolverStep)->Arg(128)->Arg(256)->Arg(512);

void BM_WeakL2(benchmark::State& state) {
  const Grid g(int(state.range(0)), 40.0);
  const VectorField u = biot_savart(dipole(g));
  for (auto _ : state) benchmark::DoNotOptimize(weak_l2_quasinorm(u));
}
BENCHMARK(BM_WeakL2)->Arg(256)->Arg(1024);

void BM_CutoffEval(benchmark::State& state) {
  double r = 1.0;
  for (auto _ : state) {
    r = 1.0 + std::fmod(r * 1.61803398875, 1.0);
    benchmark::DoNotOptimize(cutoff_eval(r, kCut));
  }
}
BENCHMARK(BM_CutoffEval);

void BM_TruncatedVorticity(benchmark::State& state) {
  const Grid g(256, 40.0);
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sample(
        [t](Vec2 x) { return truncated_vorticity({x, t}, kCut); }, g));
    t += 1.0;
  }
}
BENCHMARK(BM_TruncatedVorticity);

}  // namespace

BENCHMARK_MAIN();
