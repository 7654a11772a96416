#include <benchmark/benchmark.h>

#include "tautkit/holonomy.hpp"
#include "tautkit/norm_ball.hpp"
#include "tautkit/symplectic.hpp"

using namespace tautkit;

static void BM_DetVMinusId(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const IntMatrix vm = build_V(g) - IntMatrix::identity(2 * static_cast<std::size_t>(g));
  for (auto _ : state) benchmark::DoNotOptimize(det_exact(vm));
  state.SetLabel("g=" + std::to_string(g));
}
BENCHMARK(BM_DetVMinusId)->DenseRange(6, 16, 2)->Arg(32)->Arg(64);

static void BM_PolarDual(benchmark::State& state) {
  const RatPolytope ball = norm_ball_from_values(NormSpec::fibered_family(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(polar_dual(ball));
}
BENCHMARK(BM_PolarDual)->Arg(3)->Arg(10)->Arg(100);

static void BM_CandidatePipeline(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const NormSpec spec = NormSpec::fibered_family(g);
  for (auto _ : state) benchmark::DoNotOptimize(candidate_pipeline(spec, g));
}
BENCHMARK(BM_CandidatePipeline)->Arg(3)->Arg(10)->Arg(40);

static void BM_TauWitness(benchmark::State& state) {
  const PLHomeo u({-1, 0, 1}, {-1, Rational(1, 3), 1});
  const PLHomeo v({-1, Rational(1, 2), 1}, {-1, Rational(-1, 5), 1});
  const int samples = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_tau(u, v, ConcatCase::a, samples));
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_TauWitness)->Arg(64)->Arg(512);
BENCHMARK_MAIN();
