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

#ifndef RDPFDP_CURVE_HPP
#define RDPFDP_CURVE_HPP

#include <optional>
#include <string>
#include <vector>

#include "rdpfdp/bernoulli_divergence.hpp"

namespace rdpfdp {

// Which of the two divergence constraints is tight at a boundary point.
enum class BindingDirection { kForward, kReverse, kBoth };

std::string to_string(BindingDirection d);

struct CurveSample {
  double alpha;
  double beta;
  // Order whose region boundary determines this sample (envelope curves).
  std::optional<Order> tau_active;
  // Binding constraint direction (single-order region curves).
  std::optional<BindingDirection> binding;
};

// A sampled trade-off curve: alpha strictly increasing, beta non-increasing,
// convex, and never above the random-guessing diagonal beta = 1 - alpha.
struct TradeoffCurve {
  std::vector<CurveSample> samples;
};

// Returns the invariant violations of a curve (empty when it is a valid
// sampled trade-off function). Convexity is checked with a midpoint test on
// consecutive triples.
std::vector<std::string> curve_violations(const TradeoffCurve& curve,
                                          double convexity_tol = 1e-9,
                                          double diagonal_tol = 1e-12);

// Throws std::domain_error unless alphas is strictly increasing within [0,1].
void check_alpha_grid(const std::vector<double>& alphas);

// Uniform n-point grid covering [0,1] (n >= 2).
std::vector<double> uniform_alpha_grid(int n);

}  // namespace rdpfdp

#endif  // RDPFDP_CURVE_HPP
