// Copyright 2026 The prosdp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "prosdp/eigenvalue.hpp"
#include "prosdp/maxcut.hpp"
#include "prosdp/pro.hpp"

namespace {

using namespace prosdp;

SymMatrix random_sym(std::mt19937& rng, int n, double scale) {
  std::uniform_real_distribution<double> dist(-scale, scale);
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.set(i, j, dist(rng));
  return m;
}

UncertainGraph random_box_graph(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> wdist(1.0, 2.0), unit(0.0, 1.0);
  UncertainGraph g;
  g.kind = UncertainGraph::Kind::Box;
  g.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      UncertainGraph::Edge e;
      e.i = i;
      e.j = j;
      e.w = wdist(rng);
      e.dev = unit(rng) * (e.w - 1.0);
      g.edges.push_back(e);
    }
  return g;
}

void BM_SymEig(benchmark::State& state) {
  std::mt19937 rng(1);
  const SymMatrix m = random_sym(rng, int(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sym_eig(m));
}
BENCHMARK(BM_SymEig)->Arg(10)->Arg(20)->Arg(40);

void BM_NominalLambdaMax(benchmark::State& state) {
  std::mt19937 rng(2);
  const SymMatrix c = random_sym(rng, int(state.range(0)), 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(nominal_lambda_max(c));
}
BENCHMARK(BM_NominalLambdaMax)->Arg(5)->Arg(10)->Arg(15);

void BM_RobustSdp(benchmark::State& state) {
  std::mt19937 rng(3);
  const int n = int(state.range(0));
  const RobustSdpProblem prob{
      Spectrahedron::unit_trace(n),
      MatrixBoxUncertainty(random_sym(rng, n, 2.0),
                           {random_sym(rng, n, 1.0), random_sym(rng, n, 1.0)},
                           {-0.5, -0.5}, {0.5, 0.5})};
  for (auto _ : state) benchmark::DoNotOptimize(solve_robust(prob));
}
BENCHMARK(BM_RobustSdp)->Arg(4)->Arg(8);

void BM_MaxcutSdp(benchmark::State& state) {
  std::mt19937 rng(4);
  const UncertainGraph g = random_box_graph(rng, int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(robust_maxcut_sdp(g));
}
BENCHMARK(BM_MaxcutSdp)->Arg(5)->Arg(8);

void BM_GwRound(benchmark::State& state) {
  std::mt19937 rng(5);
  const UncertainGraph g = random_box_graph(rng, 8);
  const SdpResult sdp = robust_maxcut_sdp(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(gw_round(g, sdp.y, int(state.range(0)), 42));
}
BENCHMARK(BM_GwRound)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
