#include <benchmark/benchmark.h>

#include <cmath>

#include "hdlab/capacity.hpp"
#include "hdlab/certify.hpp"
#include "hdlab/norms.hpp"

using namespace hdlab;

namespace {

GridFunction wavy(std::size_t M) {
  return GridFunction::sample(M, [](double t) { return cplx(std::cos(3 * t), std::sin(t) * std::sin(t)); });
}

void BM_Analyze(benchmark::State& state) {
  const auto g = wavy(static_cast<std::size_t>(state.range(0)));
  const int N = static_cast<int>(state.range(0) / 2) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(analyze(g, N));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Analyze)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_Douglas(benchmark::State& state) {
  const auto g = wavy(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(douglas_energy(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Douglas)->RangeMultiplier(2)->Range(1 << 9, 1 << 13)->Complexity(benchmark::oNSquared);

void BM_GammaSplit(benchmark::State& state) {
  const std::size_t M = static_cast<std::size_t>(state.range(0));
  const auto E = build_E_beta(1.0, 10000);
  const auto f = build_test_function(E, 0.75, M);
  const auto cert = p_eps_thm3(E, 0.4, 1e-2, M);
  const auto pf = pointwise_mul(cert.p.boundary, f);
  const auto key = sample_distance(E, M);
  const auto dg = spectral_derivative(pf), dp = spectral_derivative(cert.p.boundary), dq = spectral_derivative(f);
  for (auto _ : state)
    benchmark::DoNotOptimize(gamma_split(pf.samples(), cert.p.boundary.samples(), f.samples(), key, dg.samples(),
                                         dp.samples(), dq.samples()));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GammaSplit)->RangeMultiplier(2)->Range(1 << 9, 1 << 13)->Complexity(benchmark::oNSquared);

void BM_EquilibriumArc(benchmark::State& state) {
  const auto E = CircleSet::from_arcs({{0.0, 3.0}});
  const std::size_t R = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equilibrium_measure(E, R).report.energy);
}
BENCHMARK(BM_EquilibriumArc)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_EquilibriumCantor(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto E = build_cantor(slowly_closing_ratios(d), d);
  for (auto _ : state) benchmark::DoNotOptimize(equilibrium_measure(E, 512).report.energy);
}
BENCHMARK(BM_EquilibriumCantor)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_CarlesonEBeta(benchmark::State& state) {
  const auto E = build_E_beta(1.0, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(carleson_integral(E).value);
}
BENCHMARK(BM_CarlesonEBeta)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
