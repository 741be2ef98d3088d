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

#ifndef RDPFDP_REGION_HPP
#define RDPFDP_REGION_HPP

#include <vector>

#include "rdpfdp/bernoulli_divergence.hpp"
#include "rdpfdp/curve.hpp"

namespace rdpfdp {

// The single-order privacy region: all error pairs (alpha, beta) whose
// induced Bernoulli pair satisfies the order-tau divergence budget rho in
// both directions. Convex and symmetric about alpha = beta.
struct SingleOrderRegion {
  Order tau;
  double rho;  // nonnegative, +infinity means no constraint
};

struct RegionBoundaryPoint {
  ErrorPair pair;
  BindingDirection binding;
};

// Membership test. True iff both
//   D_tau(Bern(alpha) || Bern(1-beta)) <= rho and
//   D_tau(Bern(1-beta) || Bern(alpha)) <= rho.
// The inequality orientation of the tau < 1 case is absorbed by comparing
// divergences, which are case-uniform.
bool contains(const SingleOrderRegion& region, const ErrorPair& pair);

// Least beta with (alpha, beta) in the region, to absolute tolerance 1e-12.
// The beta-slice of the convex region is an interval containing 1 - alpha,
// so bisection of the membership predicate over [0, 1-alpha] is valid.
// Closed forms at alpha in {0, 1} and rho in {0, +inf} bypass the solver.
double boundary_beta(const SingleOrderRegion& region, double alpha);

// The unique p* in [0.5, 1) with D_tau(Bern(1-p*) || Bern(p*)) = rho, found
// by bisection on the strictly increasing divergence. The boundary crosses
// the diagonal at (1-p*, 1-p*). Throws on rho = +infinity.
double symmetric_point(const SingleOrderRegion& region);

// Constraint direction(s) within 1e-9 of the budget at a boundary point.
BindingDirection binding_direction(const SingleOrderRegion& region,
                                   const ErrorPair& pair);

// Lower boundary sampled on a strictly increasing alpha grid, each sample
// annotated with its binding direction.
TradeoffCurve sample_curve(const SingleOrderRegion& region,
                           const std::vector<double>& alphas);

}  // namespace rdpfdp

#endif  // RDPFDP_REGION_HPP
