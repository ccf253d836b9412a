#include <benchmark/benchmark.h>

#include "jcnc/jc_engine.hpp"
#include "jcnc/nonclassicality.hpp"
#include "jcnc/runner.hpp"

namespace {

using namespace jcnc;

void BM_Evolve(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const JCEvolver evolver(d);
  const DensityOperator rho0 = initial_state(ThermalFieldExcitedAtom{0.5}, d);
  double T = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolver.evolve(rho0, T));
    T += 0.01;
  }
}
BENCHMARK(BM_Evolve)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_EntanglementPotential(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const DensityOperator rho = reduced_states(evolve(initial_state(ThermalFieldExcitedAtom{0.5}, d), 0.8)).field;
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_potential(rho));
}
BENCHMARK(BM_EntanglementPotential)->Arg(3)->Arg(4)->Arg(8);

void BM_Cascade(benchmark::State& state) {
  const int layers = static_cast<int>(state.range(0));
  const DensityOperator rho = reduced_states(evolve(initial_state(VacuumFieldExcitedAtom{}, 2), 0.8)).field;
  for (auto _ : state) benchmark::DoNotOptimize(cascade(rho, layers));
}
BENCHMARK(BM_Cascade)->DenseRange(1, 6);

void BM_RunScenario(benchmark::State& state) {
  const ScenarioConfig cfg = parse_config(R"({"case": "A", "layers": 2})");
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(cfg));
  state.SetItemsProcessed(state.iterations() * cfg.n_points);
}
BENCHMARK(BM_RunScenario)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
