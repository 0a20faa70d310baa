// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "qdiscord/correlations.hpp"
#include "qdiscord/ed.hpp"
#include "qdiscord/tfim.hpp"

namespace {

using namespace qdiscord;
using namespace qdiscord::ed;
using namespace qdiscord::tfim;

// Generic state with c4, c5 != 0 so the numerical optimizer runs.
const CorrCoeffs kGeneric{0.3, 0.1, -0.2, 0.15, 0.25};

void BM_ClassicalGridRefine(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classical_correlation(kGeneric, Strategy::grid_refine));
}
BENCHMARK(BM_ClassicalGridRefine);

void BM_ClassicalClosedForm(benchmark::State& state) {
  const CorrCoeffs c{0.3, 0.1, -0.2, 0.0, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(classical_correlation_closed_form(c));
}
BENCHMARK(BM_ClassicalClosedForm);

void BM_TfimCorrelators(benchmark::State& state) {
  const TfimPoint p{1.0, static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(tfim_correlators(p));
}
BENCHMARK(BM_TfimCorrelators)->Arg(64)->Arg(1024)->Arg(4096);

void BM_XxzMatvec(benchmark::State& state) {
  const int sites = static_cast<int>(state.range(0));
  const RingSpec spec = RingSpec::xxz(sites, -0.5);
  const RingHamiltonian h = build_hamiltonian(spec, sites / 2);
  std::vector<double> x(h.dim(), 1.0);
  std::vector<double> y(h.dim());
  for (auto _ : state) {
    h.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(h.dim()));
}
BENCHMARK(BM_XxzMatvec)->Arg(12)->Arg(16)->Arg(20);

void BM_XxzGroundSpace(benchmark::State& state) {
  const RingSpec spec = RingSpec::xxz(static_cast<int>(state.range(0)), -0.5);
  for (auto _ : state) benchmark::DoNotOptimize(ground_space(spec));
}
BENCHMARK(BM_XxzGroundSpace)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
