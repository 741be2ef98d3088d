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

#include "rdpfdp/bernoulli_divergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace rdpfdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// log(p^tau * q^(1-tau)) under the 0^x = 0 convention.
double log_power_term(double p, double q, double tau) {
  if (p == 0.0) return -kInf;
  if (q == 0.0) return tau > 1.0 ? kInf : -kInf;
  return tau * std::log(p) + (1.0 - tau) * std::log(q);
}

double log_sum_exp2(double x, double y) {
  if (x == kInf || y == kInf) return kInf;
  if (x == -kInf) return y;
  if (y == -kInf) return x;
  const double m = std::max(x, y);
  return m + std::log1p(std::exp(std::min(x, y) - m));
}

// p * log(p/q) with 0 * log 0 = 0.
double kl_term(double p, double q) {
  if (p == 0.0) return 0.0;
  if (q == 0.0) return kInf;
  return p * std::log(p / q);
}

}  // namespace

Order Order::finite(double tau) {
  if (!(tau >= 0.5)) {
    throw std::domain_error("Order must be >= 0.5, got " + std::to_string(tau));
  }
  // Snapping the whole band to the exact KL order keeps every consumer
  // (budgets, membership, boundaries) consistent: in-band orders carry the
  // tau = 1 budget and the KL divergence, a valid constraint in itself.
  if (!std::isinf(tau) && std::abs(tau - 1.0) < kKlBand) return Order(1.0);
  return Order(tau);
}

bool Order::is_infinite() const { return std::isinf(value_); }

bool Order::is_kl() const {
  return !is_infinite() && std::abs(value_ - 1.0) < kKlBand;
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error(std::string(name) + " must be a probability in [0,1]");
  }
}

double renyi_log_generator(double a, double b, double tau) {
  check_probability(a, "a");
  check_probability(b, "b");
  return log_sum_exp2(log_power_term(a, b, tau),
                      log_power_term(1.0 - a, 1.0 - b, tau));
}

double bernoulli_kl(double a, double b) {
  check_probability(a, "a");
  check_probability(b, "b");
  if (a == b) return 0.0;
  return std::max(0.0, kl_term(a, b) + kl_term(1.0 - a, 1.0 - b));
}

double bernoulli_max_divergence(double a, double b) {
  check_probability(a, "a");
  check_probability(b, "b");
  if (a == b) return 0.0;
  auto ratio = [](double p, double q) {
    if (p == 0.0) return q == 0.0 ? 1.0 : 0.0;
    if (q == 0.0) return kInf;
    return p / q;
  };
  const double r = std::max(ratio(a, b), ratio(1.0 - a, 1.0 - b));
  return std::max(0.0, std::log(r));
}

double renyi_divergence(double a, double b, Order tau) {
  check_probability(a, "a");
  check_probability(b, "b");
  if (a == b) return 0.0;
  if (tau.is_infinite()) return bernoulli_max_divergence(a, b);
  if (tau.is_kl()) return bernoulli_kl(a, b);
  const double t = tau.value();
  const double s = renyi_log_generator(a, b, t);
  // For tau > 1 the generator is >= 0; for tau < 1 it is <= 0. Either way
  // the quotient is nonnegative up to rounding.
  return std::max(0.0, s / (t - 1.0));
}

}  // namespace rdpfdp
