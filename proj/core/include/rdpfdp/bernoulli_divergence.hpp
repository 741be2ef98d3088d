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

#ifndef RDPFDP_BERNOULLI_DIVERGENCE_HPP
#define RDPFDP_BERNOULLI_DIVERGENCE_HPP

#include <limits>

namespace rdpfdp {

// A Renyi order: a finite value >= 0.5, the KL limit (order 1), or the
// max-divergence limit (order infinity). Orders below 0.5 are not
// representable; their constraints are subsumed by the mirrored order 1-tau.
class Order {
 public:
  // Finite order, must be >= 0.5. Values within kKlBand of 1 are snapped to
  // the KL order exactly.
  static Order finite(double tau);
  static Order kl() { return Order(1.0); }
  static Order infinite() {
    return Order(std::numeric_limits<double>::infinity());
  }

  double value() const { return value_; }
  bool is_infinite() const;
  bool is_kl() const;

  friend bool operator==(const Order& a, const Order& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const Order& a, const Order& b) {
    return a.value_ < b.value_;
  }

 private:
  explicit Order(double v) : value_(v) {}
  double value_;
};

// Width of the band around tau = 1 inside which the order is snapped to the
// KL limit. The 1/(tau-1) prefactor loses precision there, and the snap makes
// the divergence exactly continuous across the band. Slightly wider than the
// 1e-4 continuity window so that rounded endpoints like 1 +/- 1e-4 land
// inside it.
inline constexpr double kKlBand = 1.25e-4;

// A point (alpha, beta) in the unit square: Type I / Type II error rates
// of a binary test.
struct ErrorPair {
  double alpha;
  double beta;
};

// Throws std::domain_error unless p is in [0, 1].
void check_probability(double p, const char* name);

// Log of the two-term Renyi generator for Bernoulli distributions,
//   log( a^tau b^(1-tau) + (1-a)^tau (1-b)^(1-tau) ),
// evaluated as a log-sum-exp of tau*log(a) + (1-tau)*log(b) and
// tau*log(1-a) + (1-tau)*log(1-b). Conventions: 0^x = 0 for x > 0 and
// 0 * log 0 = 0, so a zero base with positive exponent kills its term.
// Defined for any finite tau != 1 (callers stay within tau >= 0.5; the
// extended range exists for test oracles).
double renyi_log_generator(double a, double b, double tau);

// KL(Bern(a) || Bern(b)). +infinity when the support condition fails.
double bernoulli_kl(double a, double b);

// D_inf(Bern(a) || Bern(b)) = log max(a/b, (1-a)/(1-b)), with 0/0 read as 1.
double bernoulli_max_divergence(double a, double b);

// Renyi divergence D_tau(Bern(a) || Bern(b)). Nonnegative, zero iff a == b,
// +infinity on support mismatch (a first-class verdict, not an error).
// All finite-order evaluation happens in the log domain.
double renyi_divergence(double a, double b, Order tau);

}  // namespace rdpfdp

#endif  // RDPFDP_BERNOULLI_DIVERGENCE_HPP
