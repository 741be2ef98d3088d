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

#ifndef RDPFDP_PROFILE_HPP
#define RDPFDP_PROFILE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rdpfdp/bernoulli_divergence.hpp"

namespace rdpfdp {

// rho(tau) = tau / (2 sigma^2): Gaussian mechanism with unit sensitivity.
struct GaussianProfile {
  double sigma;
};

// Exact profile of symmetric randomized response with retention parameter p,
//   rho(tau) = D_tau(Bern(p) || Bern(1-p)),
// with the KL value at tau = 1 and log(p/(1-p)) at tau = infinity.
struct RandomizedResponseProfile {
  double p;  // in (0.5, 1) exclusive
};

// A single-order guarantee: rho_star at tau_star, +infinity elsewhere.
struct PointGuaranteeProfile {
  Order tau_star;
  double rho_star;
};

// User-supplied table of (tau, rho) pairs, strictly increasing in tau.
// Evaluation interpolates h(tau) = (tau - 1) rho(tau) with linear chords,
// which over-estimates rho for convex h and therefore never fabricates a
// stronger constraint. Outside the tabulated range rho = +infinity.
struct TabulatedProfile {
  std::vector<std::pair<double, double>> points;
};

class RdpProfile {
 public:
  using Variant = std::variant<GaussianProfile, RandomizedResponseProfile,
                               PointGuaranteeProfile, TabulatedProfile>;

  // Validates the variant's invariants; throws std::domain_error.
  explicit RdpProfile(Variant v);

  const Variant& variant() const { return variant_; }

  // Budget at the given order. Infinite values mean "no constraint".
  double rho_at(Order tau) const;

  // Orders that any envelope search must evaluate regardless of its grid
  // (a point guarantee's tau_star, a table's knots).
  std::vector<Order> special_orders() const;

  // Strict JSON ingestion. Schema:
  //   {"type":"gaussian","sigma":<float>}
  //   {"type":"rr","p":<float>}
  //   {"type":"point","tau":<float>,"rho":<float>}
  //   {"type":"table","points":[[tau,rho],...]}
  // Unknown keys are rejected; diagnostics name the offending key.
  static RdpProfile from_json_text(const std::string& text);

 private:
  Variant variant_;
};

struct ProfileValidationReport {
  bool nonnegative = true;
  // tau values where a finite rho decreases relative to the previous
  // finite sample.
  std::vector<std::string> monotonicity_warnings;
  std::vector<std::pair<double, bool>> finiteness;  // (tau, rho finite?)
  bool all_checks_pass() const {
    return nonnegative && monotonicity_warnings.empty();
  }
};

// Report-only diagnostics of a profile evaluated on a tau grid (values must
// be >= 0.5). The profile is not mutated.
ProfileValidationReport validate_profile(const RdpProfile& profile,
                                         const std::vector<double>& tau_grid);

}  // namespace rdpfdp

#endif  // RDPFDP_PROFILE_HPP
