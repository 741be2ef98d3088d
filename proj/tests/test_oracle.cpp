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
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "rdpfdp/envelope.hpp"
#include "rdpfdp/oracle.hpp"

using namespace rdpfdp;

TEST_CASE("grid boundary examples") {
  // Zero budget: the first feasible grid beta at alpha = 0.5 is ceil(0.5 n)/n.
  CHECK(grid_boundary_beta({Order::finite(2.0), 0.0}, 0.5, 10) == 0.5);
  CHECK(grid_boundary_beta({Order::finite(2.0), 0.0}, 0.45, 10) == 0.6);
  // Infinite budget admits beta = 0 immediately.
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(grid_boundary_beta({Order::finite(2.0), inf}, 0.3, 10) == 0.0);
  // No feasible point below the diagonal still returns the fallback.
  CHECK(grid_boundary_beta({Order::finite(8.0), 1e-12}, 0.3, 10) == 0.7);
  CHECK_THROWS_AS(grid_boundary_beta({Order::finite(2.0), 1.0}, 0.5, 0),
                  std::domain_error);
  CHECK_THROWS_AS(grid_boundary_beta({Order::finite(2.0), 1.0}, 1.5, 10),
                  std::domain_error);
}

TEST_CASE("oracle sandwiches the bisection boundary") {
  const std::vector<SingleOrderRegion> regions = {
      {Order::finite(0.5), 0.3},
      {Order::kl(), 0.5},
      {Order::finite(2.0), std::log(7.0 / 3.0)},
      {Order::finite(8.0), 2.0},
  };
  const int n = 512;
  for (const auto& region : regions) {
    for (int i = 0; i <= 20; ++i) {
      const double a = i / 20.0;
      const double exact = boundary_beta(region, a);
      const double oracle = grid_boundary_beta(region, a, n);
      CHECK(oracle >= exact - 1e-9);
      CHECK(oracle <= exact + 1.0 / n + 1e-9);
    }
  }
}

TEST_CASE("doubling the resolution refines monotonically") {
  const SingleOrderRegion region{Order::finite(2.0), 0.8};
  for (int i = 1; i < 10; ++i) {
    const double a = i / 10.0;
    double prev = grid_boundary_beta(region, a, 256);
    for (int n = 512; n <= 4096; n *= 2) {
      const double cur = grid_boundary_beta(region, a, n);
      // A finer grid can only move the scan result down, and never by more
      // than the coarser grid's spacing.
      CHECK(cur <= prev + 1e-15);
      CHECK(cur >= prev - 2.0 / n);
      prev = cur;
    }
  }
}

TEST_CASE("grid envelope agrees with the continuous envelope") {
  const RdpProfile profile(GaussianProfile{1.0});
  std::vector<Order> tau_grid;
  for (double t = 0.5; t <= 256.0; t *= 1.1) tau_grid.push_back(Order::finite(t));
  const int n = 2048;
  for (double a : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    const double oracle = grid_envelope_beta(profile, a, tau_grid, n);
    const double env = envelope_beta(profile, a).beta;
    CHECK(std::abs(env - oracle) <= 1.0 / n + 1e-4);
  }
  // An empty order set imposes no constraint at all.
  CHECK(grid_envelope_beta(profile, 0.5, {}, n) == 0.0);
}
