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

#include "rdpfdp/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rdpfdp {

namespace {

void check_config(const OrderSearchConfig& cfg) {
  if (!(cfg.tau_min >= 0.5 && cfg.tau_min < cfg.tau_max) ||
      std::isinf(cfg.tau_max)) {
    throw std::invalid_argument(
        "order search: need 0.5 <= tau_min < tau_max < inf");
  }
  if (cfg.coarse_grid_size < 2) {
    throw std::invalid_argument("order search: coarse grid needs >= 2 points");
  }
  if (cfg.refinement_iterations < 0) {
    throw std::invalid_argument("order search: negative refinement iterations");
  }
}

double single_order_beta(const RdpProfile& profile, Order tau, double alpha) {
  return boundary_beta({tau, profile.rho_at(tau)}, alpha);
}

bool include_infinite(const RdpProfile& profile, const OrderSearchConfig& cfg) {
  if (cfg.include_infinite_order.has_value()) {
    return *cfg.include_infinite_order;
  }
  return std::isfinite(profile.rho_at(Order::infinite()));
}

}  // namespace

std::vector<Order> search_orders(const RdpProfile& profile,
                                 const OrderSearchConfig& cfg) {
  check_config(cfg);
  std::vector<Order> orders;
  orders.reserve(static_cast<std::size_t>(cfg.coarse_grid_size) + 4);
  const double log_lo = std::log(cfg.tau_min);
  const double log_hi = std::log(cfg.tau_max);
  for (int i = 0; i < cfg.coarse_grid_size; ++i) {
    const double w =
        static_cast<double>(i) / static_cast<double>(cfg.coarse_grid_size - 1);
    orders.push_back(Order::finite(std::exp(log_lo + w * (log_hi - log_lo))));
  }
  for (Order o : profile.special_orders()) orders.push_back(o);
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  return orders;
}

EnvelopePoint envelope_beta(const RdpProfile& profile, double alpha,
                            const OrderSearchConfig& cfg) {
  check_probability(alpha, "alpha");
  const std::vector<Order> orders = search_orders(profile, cfg);
  if (orders.empty()) {
    throw std::invalid_argument("order search: empty search set");
  }

  // Coarse pass; ascending order so ties resolve toward the smaller tau.
  std::size_t best_idx = 0;
  EnvelopePoint best{-1.0, orders.front()};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    const double beta = single_order_beta(profile, orders[i], alpha);
    if (beta > best.beta) {
      best = {beta, orders[i]};
      best_idx = i;
    }
  }

  // Golden-section refinement in log tau around the coarse argmax bracket.
  if (cfg.refinement_iterations > 0 && orders.size() >= 2) {
    const std::size_t lo_idx = best_idx > 0 ? best_idx - 1 : best_idx;
    const std::size_t hi_idx =
        best_idx + 1 < orders.size() ? best_idx + 1 : best_idx;
    double a = std::log(orders[lo_idx].value());
    double b = std::log(orders[hi_idx].value());
    if (b > a) {
      auto eval = [&](double log_tau) {
        const Order tau = Order::finite(std::exp(log_tau));
        const double beta = single_order_beta(profile, tau, alpha);
        if (beta > best.beta) best = {beta, tau};
        return beta;
      };
      constexpr double kInvPhi = 0.6180339887498949;
      double c = b - kInvPhi * (b - a);
      double d = a + kInvPhi * (b - a);
      double fc = eval(c);
      double fd = eval(d);
      for (int i = 0; i < cfg.refinement_iterations; ++i) {
        if (fc > fd) {
          b = d;
          d = c;
          fd = fc;
          c = b - kInvPhi * (b - a);
          fc = eval(c);
        } else {
          a = c;
          c = d;
          fc = fd;
          d = a + kInvPhi * (b - a);
          fd = eval(d);
        }
      }
    }
  }

  if (include_infinite(profile, cfg)) {
    const Order inf = Order::infinite();
    const double beta = single_order_beta(profile, inf, alpha);
    if (beta > best.beta) best = {beta, inf};
  }
  if (best.beta < 0.0) best.beta = 0.0;
  return best;
}

TradeoffCurve envelope_curve(const RdpProfile& profile,
                             const std::vector<double>& alphas,
                             const OrderSearchConfig& cfg) {
  check_alpha_grid(alphas);
  TradeoffCurve curve;
  curve.samples.reserve(alphas.size());
  for (double alpha : alphas) {
    const EnvelopePoint pt = envelope_beta(profile, alpha, cfg);
    CurveSample s;
    s.alpha = alpha;
    s.beta = pt.beta;
    s.tau_active = pt.tau_active;
    curve.samples.push_back(s);
  }
  return curve;
}

double delta_at(const TradeoffCurve& curve, double epsilon) {
  if (!(epsilon >= 0.0)) {
    throw std::domain_error("delta_at: epsilon must be nonnegative");
  }
  const double scale = std::exp(epsilon);
  double sup = 0.0;
  for (const auto& s : curve.samples) {
    sup = std::max(sup, 1.0 - scale * s.alpha - s.beta);
  }
  return sup;
}

bool joint_contains(const RdpProfile& profile, const ErrorPair& pair,
                    const std::vector<Order>& tau_grid) {
  for (Order tau : tau_grid) {
    if (!contains({tau, profile.rho_at(tau)}, pair)) return false;
  }
  return true;
}

}  // namespace rdpfdp
