// Copyright 2026 planarsim Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "psc/blossom.hpp"
#include "psc/matching.hpp"
#include "psc/rng.hpp"

namespace {

using namespace psc;

void bm_blossom_dense(benchmark::State &state) {
  int n = static_cast<int>(state.range(0));
  Pcg32 rng(42, 42);
  std::vector<std::vector<int64_t>> w(n, std::vector<int64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      w[i][j] = w[j][i] = static_cast<int64_t>(rng.next_below(1 << 20));
    }
  }
  BlossomMatcher matcher;
  for (auto _ : state) {
    auto mate = matcher.solve(w);
    benchmark::DoNotOptimize(mate);
  }
}

void bm_weighted_graph_build(benchmark::State &state) {
  int d = static_cast<int>(state.range(0));
  PlanarLattice lattice(d);
  std::vector<QubitSpec> specs(lattice.num_data_qubits(),
                               QubitSpec{0, 80, 60});
  for (auto _ : state) {
    auto g = WeightedLatticeGraph::reweighted(
        lattice, SubgraphKind::detects_xy, specs, 12.0);
    benchmark::DoNotOptimize(g);
  }
}

}  // namespace

BENCHMARK(bm_blossom_dense)->Arg(8)->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(bm_weighted_graph_build)->Arg(3)->Arg(5)->Arg(7)->Arg(11);
