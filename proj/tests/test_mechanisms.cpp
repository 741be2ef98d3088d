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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "rdpfdp/mechanisms.hpp"
#include "rdpfdp/oracle.hpp"

using namespace rdpfdp;

TEST_CASE("rr_epsilon") {
  CHECK(rr_epsilon(0.75) == doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK(rr_epsilon(0.9) == doctest::Approx(std::log(9.0)).epsilon(1e-14));
  CHECK(rr_epsilon(0.5 + 1e-12) == doctest::Approx(0.0).epsilon(1e-8));
  CHECK_THROWS_AS(rr_epsilon(0.5), std::domain_error);
  CHECK_THROWS_AS(rr_epsilon(1.0), std::domain_error);
}

TEST_CASE("pure_dp_tradeoff") {
  for (double a : {0.0, 0.3, 1.0}) {
    CHECK(pure_dp_tradeoff(0.0, 0.0, a) == 1.0 - a);
    CHECK(pure_dp_tradeoff(2.0, 1.0, a) == 0.0);
  }
  // Kink of f_{ln 3, 0}: both nonzero branches meet at 0.25.
  CHECK(pure_dp_tradeoff(std::log(3.0), 0.0, 0.25) ==
        doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("normal cdf and quantile") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  CHECK(std_normal_quantile(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  // Round trip accuracy across the unit interval.
  for (int i = 1; i < 2000; ++i) {
    const double p = i / 2000.0;
    CHECK(std::abs(std_normal_cdf(std_normal_quantile(p)) - p) <= 1e-13);
  }
  // Tails.
  for (double p : {1e-12, 1e-9, 1e-6, 1.0 - 1e-6}) {
    const double x = std_normal_quantile(p);
    CHECK(std::abs(std_normal_cdf(x) - p) <= 1e-13 * std::max(1.0, 1.0 / p * 1e-12) + 1e-15);
    CHECK(std::abs(std_normal_cdf(x) / p - 1.0) <= 1e-10);
  }
  CHECK_THROWS_AS(std_normal_quantile(-0.1), std::domain_error);
}

TEST_CASE("gaussian_tradeoff") {
  CHECK(gaussian_tradeoff({1.0}, 0.5) ==
        doctest::Approx(std_normal_cdf(-1.0)).epsilon(1e-14));
  CHECK(gaussian_tradeoff({1.0}, 0.0) == 1.0);
  CHECK(gaussian_tradeoff({1.0}, 1.0) == 0.0);
  // Vanishing signal: curve approaches the diagonal as sigma grows.
  for (double a : {0.1, 0.5, 0.9}) {
    CHECK(std::abs(gaussian_tradeoff({1e4}, a) - (1.0 - a)) <= 1e-3);
  }
}

TEST_CASE("witness construction and saturation") {
  const RdpProfile point(PointGuaranteeProfile{Order::finite(2.0),
                                               std::log(7.0 / 3.0)});
  const BernoulliWitness w = witness_at(point, 0.25);
  CHECK(w.a == 0.25);
  CHECK(w.b == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(w.operating_point.alpha == 0.25);
  CHECK(w.operating_point.beta == doctest::Approx(0.25).epsilon(1e-10));

  // RR-profile witness converges to the pure-DP operating point.
  OrderSearchConfig cfg;
  cfg.tau_max = 256.0;
  const RdpProfile rr(RandomizedResponseProfile{0.75});
  const BernoulliWitness wrr = witness_at(rr, 0.25, cfg);
  CHECK(std::abs(wrr.operating_point.beta - 0.25) <= 1e-3);

  // Degenerate witness: a profile so weak the boundary collapses to 0.
  const RdpProfile weak(GaussianProfile{0.01});
  CHECK_THROWS_AS(witness_at(weak, 0.5), std::domain_error);
  CHECK_THROWS_AS(witness_at(rr, 0.0, cfg), std::domain_error);
}

TEST_CASE("witness_tradeoff") {
  BernoulliWitness w{0.25, 0.75, {0.25, 0.25}};
  CHECK(witness_tradeoff(w, 0.0) == 1.0);
  CHECK(witness_tradeoff(w, 1.0) == 0.0);
  CHECK(witness_tradeoff(w, 0.25) == 0.25);
  CHECK(witness_tradeoff(w, 0.125) == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(witness_tradeoff(w, 0.5) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
}

TEST_CASE("verify_witness") {
  std::vector<Order> grid;
  for (int i = 0; i < 200; ++i) {
    const double w = i / 199.0;
    grid.push_back(Order::finite(0.5 * std::pow(512.0, w)));
  }
  const RdpProfile gaussian(GaussianProfile{1.0});

  SUBCASE("constructed witnesses satisfy every searched constraint") {
    const BernoulliWitness w = witness_at(gaussian, 0.3);
    const WitnessVerification v = verify_witness(w, gaussian, grid);
    CHECK(v.ok());
    CHECK(v.min_forward_margin >= -1e-9);
    CHECK(v.min_reverse_margin >= -1e-9);
  }

  SUBCASE("an overly distinguishable pair violates large orders") {
    BernoulliWitness w{0.9, 0.1, {0.9, 0.9}};
    const WitnessVerification v = verify_witness(w, gaussian, grid);
    CHECK_FALSE(v.ok());
  }

  SUBCASE("identical distributions violate nothing") {
    BernoulliWitness w{0.4, 0.4, {0.4, 0.6}};
    CHECK(verify_witness(w, gaussian, grid).ok());
  }
}

TEST_CASE("asymmetric rr errors") {
  // p = 0: identical distributions, a diagonal operating point.
  const ErrorPair diag = asymmetric_rr_errors(0.0, 0.3);
  CHECK(diag.alpha == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(diag.beta == doctest::Approx(0.7).epsilon(1e-14));
  // p = 1: perfect distinguishability.
  const ErrorPair perfect = asymmetric_rr_errors(1.0, 0.6);
  CHECK(perfect.alpha == 0.0);
  CHECK(perfect.beta == 0.0);
  // p = q = 0.5: p_hat = 0.25, q_hat = 0.75.
  const ErrorPair mid = asymmetric_rr_errors(0.5, 0.5);
  CHECK(mid.alpha == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(mid.beta == doctest::Approx(0.25).epsilon(1e-14));
  // Read-only budget formula.
  CHECK(AsymmetricRR{0.5, 0.5}.epsilon() ==
        doctest::Approx(std::log(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(asymmetric_rr_errors(-0.1, 0.5), std::domain_error);
}

TEST_CASE("pure-DP region nests inside every RR single-order region") {
  const double p = 0.75;
  const RdpProfile rr(RandomizedResponseProfile{p});
  const double eps = rr_epsilon(p);
  for (double t : {0.5, 1.0, 2.0, 8.0, 64.0}) {
    const Order tau = Order::finite(t);
    const SingleOrderRegion region{tau, rr.rho_at(tau)};
    for (int i = 0; i <= 20; ++i) {
      const double a = i / 20.0;
      CHECK(boundary_beta(region, a) <= pure_dp_tradeoff(eps, 0.0, a) + 1e-9);
    }
  }
}

TEST_CASE("witness curve stays inside the joint region") {
  const RdpProfile gaussian(GaussianProfile{1.0});
  const BernoulliWitness w = witness_at(gaussian, 0.3);
  for (int i = 0; i <= 40; ++i) {
    const double a = i / 40.0;
    CHECK(witness_tradeoff(w, a) >= envelope_beta(gaussian, a).beta - 1e-6);
  }
  // Saturation at the construction point.
  CHECK(witness_tradeoff(w, 0.3) ==
        doctest::Approx(envelope_beta(gaussian, 0.3).beta).epsilon(1e-12));
}
