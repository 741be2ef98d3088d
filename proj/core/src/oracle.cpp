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

#include "rdpfdp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdpfdp {

double grid_boundary_beta(const SingleOrderRegion& region, double alpha,
                          int n) {
  if (n < 2) throw std::domain_error("grid oracle: n must be >= 2");
  check_probability(alpha, "alpha");
  for (int k = 0; k <= n; ++k) {
    const double beta = static_cast<double>(k) / n;
    if (contains(region, {alpha, beta})) return beta;
  }
  // The feasible interval always reaches the diagonal; if no grid point
  // landed inside it, report the diagonal rounded up to the grid.
  return std::min(1.0, std::ceil((1.0 - alpha) * n) / n);
}

double grid_envelope_beta(const RdpProfile& profile, double alpha,
                          const std::vector<Order>& tau_grid, int n) {
  double best = 0.0;
  for (Order tau : tau_grid) {
    best = std::max(
        best, grid_boundary_beta({tau, profile.rho_at(tau)}, alpha, n));
  }
  return best;
}

}  // namespace rdpfdp
