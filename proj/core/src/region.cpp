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

#include "rdpfdp/region.hpp"

#include <cmath>
#include <stdexcept>

namespace rdpfdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Slack on membership comparisons so exact boundary points test inside.
constexpr double kMembershipSlack = 1e-12;
constexpr double kBetaTol = 1e-15;
constexpr int kMaxBisectIters = 200;

void check_region(const SingleOrderRegion& region) {
  if (!(region.rho >= 0.0)) {
    throw std::domain_error("rho must be nonnegative");
  }
}

}  // namespace

bool contains(const SingleOrderRegion& region, const ErrorPair& pair) {
  check_region(region);
  check_probability(pair.alpha, "alpha");
  check_probability(pair.beta, "beta");
  if (std::isinf(region.rho)) return true;
  const double a = pair.alpha;
  const double q = 1.0 - pair.beta;
  return renyi_divergence(a, q, region.tau) <= region.rho + kMembershipSlack &&
         renyi_divergence(q, a, region.tau) <= region.rho + kMembershipSlack;
}

double boundary_beta(const SingleOrderRegion& region, double alpha) {
  check_region(region);
  check_probability(alpha, "alpha");
  if (region.rho == 0.0) return 1.0 - alpha;
  if (std::isinf(region.rho)) return 0.0;
  if (alpha >= 1.0) return 0.0;
  if (alpha == 0.0) {
    // Log kernels at the boundary produce +/-inf arithmetic inside the
    // solver, so the alpha = 0 slice is handled in closed form. For
    // tau >= 1 the reverse constraint forces beta = 1; for tau in [0.5, 1)
    // the binding constraint gives beta = exp(-rho (1-tau)/tau).
    const double t = region.tau.value();
    if (t >= 1.0) return 1.0;
    return std::exp(-region.rho * (1.0 - t) / t);
  }
  double lo = 0.0;
  double hi = 1.0 - alpha;  // always feasible: diagonal has zero divergence
  if (contains(region, {alpha, lo})) return lo;
  for (int i = 0; i < kMaxBisectIters && hi - lo > kBetaTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (contains(region, {alpha, mid})) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double symmetric_point(const SingleOrderRegion& region) {
  check_region(region);
  if (std::isinf(region.rho)) {
    throw std::domain_error("symmetric_point: rho must be finite");
  }
  if (region.rho == 0.0) return 0.5;
  auto g = [&](double p) { return renyi_divergence(1.0 - p, p, region.tau); };
  double lo = 0.5;
  double hi = 1.0 - 1e-15;
  if (g(hi) <= region.rho) return hi;
  for (int i = 0; i < kMaxBisectIters && hi - lo > kBetaTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < region.rho) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

BindingDirection binding_direction(const SingleOrderRegion& region,
                                   const ErrorPair& pair) {
  const double a = pair.alpha;
  const double q = 1.0 - pair.beta;
  const double fwd = renyi_divergence(a, q, region.tau);
  const double rev = renyi_divergence(q, a, region.tau);
  const bool fwd_binding = std::abs(fwd - region.rho) <= 1e-9;
  const bool rev_binding = std::abs(rev - region.rho) <= 1e-9;
  if (fwd_binding && rev_binding) return BindingDirection::kBoth;
  if (fwd_binding) return BindingDirection::kForward;
  if (rev_binding) return BindingDirection::kReverse;
  // Neither within tolerance (e.g. rho = +inf); report the closer one.
  return fwd >= rev ? BindingDirection::kForward : BindingDirection::kReverse;
}

TradeoffCurve sample_curve(const SingleOrderRegion& region,
                           const std::vector<double>& alphas) {
  check_alpha_grid(alphas);
  TradeoffCurve curve;
  curve.samples.reserve(alphas.size());
  for (double alpha : alphas) {
    const double beta = boundary_beta(region, alpha);
    CurveSample s;
    s.alpha = alpha;
    s.beta = beta;
    s.tau_active = region.tau;
    s.binding = binding_direction(region, {alpha, beta});
    curve.samples.push_back(s);
  }
  return curve;
}

}  // namespace rdpfdp
