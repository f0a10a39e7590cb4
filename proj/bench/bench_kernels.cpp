// SPDX-License-Identifier: Apache-2.0
//
// Serial reference vs OpenMP kernels for the two data-parallel hot loops.
#include <benchmark/benchmark.h>

#include "rislink/ris_sizing.hpp"
#include "rislink/scenario_engine.hpp"

namespace {

using rislink::Execution;

rislink::SizingProblem far_panel_problem() {
  rislink::ScenarioConfig cfg;
  cfg.ris_height = 60.0;
  const auto links = rislink::build_links(cfg, 200.0);
  return {rislink::SpectralRate(25.0), cfg.noise(), 1.0, links.beta_nf, links.beta_nif,
          cfg.power_model.p_e};
}

void BM_BruteForce(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
  const auto prob = far_panel_problem();
  const rislink::PowerModel model;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rislink::brute_force_optimal(prob, model, 100000, exec));
  }
  state.SetItemsProcessed(state.iterations() * 100001);
}
BENCHMARK(BM_BruteForce)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SweepPower(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
  const rislink::ScenarioConfig cfg;
  const std::vector<std::size_t> n{200, 500, 1000};
  for (auto _ : state) {
    benchmark::DoNotOptimize(rislink::sweep_power(cfg, n, {0.0, 200.0}, 0.05, exec));
  }
}
BENCHMARK(BM_SweepPower)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SweepEe(benchmark::State& state) {
  const auto exec = state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
  const rislink::ScenarioConfig cfg;
  const auto grid = rislink::linear_grid(0.01, 30.0, 0.01);
  for (auto _ : state) benchmark::DoNotOptimize(rislink::sweep_ee(cfg, grid, 0.0, exec));
}
BENCHMARK(BM_SweepEe)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
