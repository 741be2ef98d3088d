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

#ifndef RDPFDP_ENVELOPE_HPP
#define RDPFDP_ENVELOPE_HPP

#include <optional>
#include <vector>

#include "rdpfdp/curve.hpp"
#include "rdpfdp/profile.hpp"
#include "rdpfdp/region.hpp"

namespace rdpfdp {

// Search strategy for the supremum over orders. A coarse log-spaced grid
// guards against missing a distant active order (unimodality in tau is not
// assumed); golden-section refinement around the coarse argmax sharpens the
// result. The returned value is a certified lower bound on the supremum.
struct OrderSearchConfig {
  double tau_min = 0.5;
  double tau_max = 256.0;
  int coarse_grid_size = 200;       // log-spaced
  int refinement_iterations = 80;   // golden-section steps
  // Unset means: include the tau = infinity constraint iff rho_at(inf)
  // is finite (pure-DP-style profiles carry the binding linear constraints
  // at the limit order).
  std::optional<bool> include_infinite_order;
};

struct EnvelopePoint {
  double beta;
  Order tau_active;
};

// Log-spaced coarse order grid of the config plus the profile's special
// orders, sorted ascending. Throws std::invalid_argument on bad configs.
std::vector<Order> search_orders(const RdpProfile& profile,
                                 const OrderSearchConfig& cfg);

// Max over the searched order set of the single-order boundary at alpha,
// plus the maximizing order. Ties break toward the smaller order.
EnvelopePoint envelope_beta(const RdpProfile& profile, double alpha,
                            const OrderSearchConfig& cfg = {});

// envelope_beta applied per sample; tau_active recorded per sample.
TradeoffCurve envelope_curve(const RdpProfile& profile,
                             const std::vector<double>& alphas,
                             const OrderSearchConfig& cfg = {});

// Smallest delta such that the sampled curve lies inside the (epsilon,
// delta)-DP region: max(0, sup over samples of 1 - e^eps alpha - beta).
// Exact for piecewise-linear curves evaluated at their vertices; curves
// destined for delta extraction should carry >= 2048 samples otherwise.
double delta_at(const TradeoffCurve& curve, double epsilon);

// True iff the pair lies in every single-order region of the grid with
// budget rho_at(profile, tau).
bool joint_contains(const RdpProfile& profile, const ErrorPair& pair,
                    const std::vector<Order>& tau_grid);

}  // namespace rdpfdp

#endif  // RDPFDP_ENVELOPE_HPP
