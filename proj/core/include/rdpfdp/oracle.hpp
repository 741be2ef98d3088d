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

#ifndef RDPFDP_ORACLE_HPP
#define RDPFDP_ORACLE_HPP

#include <vector>

#include "rdpfdp/profile.hpp"
#include "rdpfdp/region.hpp"

namespace rdpfdp {

// Brute-force boundary reference: smallest beta in {0, 1/n, ..., 1} with
// (alpha, beta) in the region, found by a deliberately dumb upward scan.
// Differs from the true boundary by at most 1/n. Its value is independence
// from the bisection logic.
double grid_boundary_beta(const SingleOrderRegion& region, double alpha,
                          int n = 4096);

// Max over the tau grid of grid_boundary_beta at budget rho_at(profile, tau).
double grid_envelope_beta(const RdpProfile& profile, double alpha,
                          const std::vector<Order>& tau_grid, int n = 4096);

}  // namespace rdpfdp

#endif  // RDPFDP_ORACLE_HPP
