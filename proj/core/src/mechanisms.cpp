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

#include "rdpfdp/mechanisms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rdpfdp {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;

// Rational initial guess for the standard normal quantile (Acklam's
// approximation), sharpened below by Halley steps against erfc.
double quantile_initial_guess(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double p_low = 0.02425;
  if (p < p_low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
            c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - p_low) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
             c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
         q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double std_normal_quantile(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("std_normal_quantile: p must be in [0,1]");
  }
  if (p == 0.0) return -std::numeric_limits<double>::infinity();
  if (p == 1.0) return std::numeric_limits<double>::infinity();
  double x = quantile_initial_guess(p);
  // Two Halley refinements take the rational guess to full double precision.
  for (int i = 0; i < 2; ++i) {
    const double e = std_normal_cdf(x) - p;
    const double u = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= u / (1.0 + 0.5 * x * u);
  }
  return x;
}

double rr_epsilon(double p) {
  if (!(p > 0.5 && p < 1.0)) {
    throw std::domain_error("rr_epsilon: p must be in (0.5, 1)");
  }
  return std::log(p / (1.0 - p));
}

double pure_dp_tradeoff(double epsilon, double delta, double alpha) {
  if (!(epsilon >= 0.0)) {
    throw std::domain_error("pure_dp_tradeoff: epsilon must be nonnegative");
  }
  check_probability(delta, "delta");
  check_probability(alpha, "alpha");
  const double hi = 1.0 - delta - std::exp(epsilon) * alpha;
  const double lo = std::exp(-epsilon) * (1.0 - delta - alpha);
  return std::max({0.0, hi, lo});
}

double gaussian_tradeoff(const GaussianMechanismRef& ref, double alpha) {
  if (!(ref.sigma > 0.0)) {
    throw std::domain_error("gaussian_tradeoff: sigma must be positive");
  }
  check_probability(alpha, "alpha");
  if (alpha == 0.0) return 1.0;
  if (alpha == 1.0) return 0.0;
  return std_normal_cdf(std_normal_quantile(1.0 - alpha) - 1.0 / ref.sigma);
}

double AsymmetricRR::epsilon() const {
  const double ph = p_hat();
  const double qh = q_hat();
  return std::log(std::max(qh / ph, (1.0 - ph) / (1.0 - qh)));
}

BernoulliWitness witness_at(const RdpProfile& profile, double alpha0,
                            const OrderSearchConfig& cfg) {
  if (!(alpha0 > 0.0 && alpha0 < 1.0)) {
    throw std::domain_error("witness_at: alpha0 must be interior to (0,1)");
  }
  const double beta_star = envelope_beta(profile, alpha0, cfg).beta;
  if (beta_star <= 1e-12 || beta_star >= 1.0 - 1e-12) {
    throw std::domain_error(
        "witness_at: envelope beta degenerates to " +
        std::to_string(beta_star) +
        " at alpha0; a Bernoulli pair at this point conveys no test");
  }
  BernoulliWitness w;
  w.a = alpha0;
  w.b = 1.0 - beta_star;
  w.operating_point = {alpha0, beta_star};
  return w;
}

double witness_tradeoff(const BernoulliWitness& witness, double alpha) {
  check_probability(alpha, "alpha");
  const double as = witness.operating_point.alpha;
  const double bs = witness.operating_point.beta;
  if (alpha <= as) {
    return 1.0 + (bs - 1.0) * (alpha / as);
  }
  return bs * (1.0 - alpha) / (1.0 - as);
}

WitnessVerification verify_witness(const BernoulliWitness& witness,
                                   const RdpProfile& profile,
                                   const std::vector<Order>& tau_grid) {
  constexpr double kTol = 1e-9;
  WitnessVerification result;
  result.min_forward_margin = std::numeric_limits<double>::infinity();
  result.min_reverse_margin = std::numeric_limits<double>::infinity();
  for (Order tau : tau_grid) {
    const double rho = profile.rho_at(tau);
    const double fwd = renyi_divergence(witness.a, witness.b, tau);
    const double rev = renyi_divergence(witness.b, witness.a, tau);
    if (std::isfinite(rho)) {
      result.min_forward_margin = std::min(result.min_forward_margin, rho - fwd);
      result.min_reverse_margin = std::min(result.min_reverse_margin, rho - rev);
    }
    auto report = [&](const char* dir, double div) {
      std::ostringstream os;
      os << dir << " divergence " << div << " exceeds budget " << rho
         << " at tau=" << tau.value();
      result.violations.push_back(os.str());
    };
    if (!(fwd <= rho + kTol)) report("forward", fwd);
    if (!(rev <= rho + kTol)) report("reverse", rev);
  }
  return result;
}

ErrorPair asymmetric_rr_errors(double p, double q) {
  check_probability(p, "p");
  check_probability(q, "q");
  const AsymmetricRR rr{p, q};
  const double ph = rr.p_hat();
  const double qh = rr.q_hat();
  // q_hat - p_hat = p >= 0 always; p = 0 is the diagonal (identical
  // distributions) and is still a valid operating point.
  if (qh < ph) {
    throw std::domain_error(
        "asymmetric_rr_errors: q_hat < p_hat violates the dominance "
        "orientation");
  }
  return {1.0 - qh, ph};
}

}  // namespace rdpfdp
