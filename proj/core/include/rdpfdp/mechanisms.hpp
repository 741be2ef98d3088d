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

#ifndef RDPFDP_MECHANISMS_HPP
#define RDPFDP_MECHANISMS_HPP

#include <string>
#include <vector>

#include "rdpfdp/envelope.hpp"

namespace rdpfdp {

// A binary witness mechanism with output distributions P = Bern(a) and
// Q = Bern(b), stored so the identity test (reject when the output is 1)
// yields operating_point = (a, 1-b).
struct BernoulliWitness {
  double a;
  double b;
  ErrorPair operating_point;
};

// Symmetric randomized response with retention parameter p.
struct SymmetricRR {
  double p;  // in [0.5, 1]
};

// Asymmetric randomized response: mixing parameter p, noise parameter q.
// Induced transition probabilities:
//   p_hat = P(y=1 | x=1) = (1-p)(1-q)
//   q_hat = P(y=1 | x=0) = p + (1-p)(1-q)
struct AsymmetricRR {
  double p;
  double q;
  double p_hat() const { return (1.0 - p) * (1.0 - q); }
  double q_hat() const { return p + (1.0 - p) * (1.0 - q); }
  // Read-only pure-DP budget: log max(q_hat/p_hat, (1-p_hat)/(1-q_hat)).
  double epsilon() const;
};

// Reference Gaussian mechanism with unit sensitivity and noise scale sigma.
struct GaussianMechanismRef {
  double sigma;
};

// Pure-DP budget of symmetric RR: log(p / (1-p)). Requires p in (0.5, 1).
double rr_epsilon(double p);

// Tightest piecewise-linear trade-off of an (epsilon, delta)-DP guarantee:
//   max{0, 1 - delta - e^eps alpha, e^-eps (1 - delta - alpha)}.
double pure_dp_tradeoff(double epsilon, double delta, double alpha);

// Standard normal CDF and quantile, accurate to <= 1e-12.
double std_normal_cdf(double x);
double std_normal_quantile(double p);

// Exact Gaussian-mechanism trade-off Phi(Phi^-1(1-alpha) - 1/sigma).
double gaussian_tradeoff(const GaussianMechanismRef& ref, double alpha);

// Witness saturating the envelope at alpha0: P = Bern(alpha0),
// Q = Bern(1 - beta*) with beta* = envelope_beta(profile, alpha0).
// Throws std::domain_error when beta* degenerates to 0 or 1 (the witness
// would convey no test).
BernoulliWitness witness_at(const RdpProfile& profile, double alpha0,
                            const OrderSearchConfig& cfg = {});

// Two-segment piecewise-linear trade-off through (0,1), the operating
// point, and (1,0).
double witness_tradeoff(const BernoulliWitness& witness, double alpha);

struct WitnessVerification {
  // Human-readable violations; empty for witnesses built by witness_at.
  std::vector<std::string> violations;
  // Smallest rho(tau) - divergence margins over the grid, per direction.
  double min_forward_margin;
  double min_reverse_margin;
  bool ok() const { return violations.empty(); }
};

// Checks renyi_divergence(a, b, tau) <= rho_at(profile, tau) + 1e-9 and the
// reverse direction for every order in the grid. Report-only.
WitnessVerification verify_witness(const BernoulliWitness& witness,
                                   const RdpProfile& profile,
                                   const std::vector<Order>& tau_grid);

// Operating point (1 - q_hat, p_hat) of the optimal test for asymmetric RR.
// Throws when q_hat < p_hat (dominance orientation violated).
ErrorPair asymmetric_rr_errors(double p, double q);

}  // namespace rdpfdp

#endif  // RDPFDP_MECHANISMS_HPP
