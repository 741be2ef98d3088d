//
// Copyright 2026 the rdpfdp authors
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
//

#include <cmath>

#include <benchmark/benchmark.h>

#include "rdpfdp/envelope.hpp"
#include "rdpfdp/region.hpp"

namespace {

using namespace rdpfdp;

void BM_RenyiDivergence(benchmark::State& state) {
  const Order tau = Order::finite(static_cast<double>(state.range(0)));
  double a = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(renyi_divergence(a, 0.7, tau));
    a = 0.3 + 1e-12 * (state.iterations() & 1);
  }
}
BENCHMARK(BM_RenyiDivergence)->Arg(2)->Arg(64);

void BM_BoundaryBeta(benchmark::State& state) {
  const SingleOrderRegion region{Order::finite(2.0), std::log(7.0 / 3.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(boundary_beta(region, 0.1));
  }
}
BENCHMARK(BM_BoundaryBeta);

void BM_EnvelopeBeta(benchmark::State& state) {
  const RdpProfile profile(GaussianProfile{1.0});
  OrderSearchConfig cfg;
  cfg.coarse_grid_size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(envelope_beta(profile, 0.2, cfg).beta);
  }
}
BENCHMARK(BM_EnvelopeBeta)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
