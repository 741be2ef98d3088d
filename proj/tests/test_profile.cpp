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
#include <limits>

#include <doctest.h>

#include "rdpfdp/profile.hpp"

using namespace rdpfdp;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("variant invariants") {
  CHECK_THROWS_AS(RdpProfile(GaussianProfile{0.0}), std::domain_error);
  CHECK_THROWS_AS(RdpProfile(GaussianProfile{-1.0}), std::domain_error);
  CHECK_THROWS_AS(RdpProfile(RandomizedResponseProfile{0.5}), std::domain_error);
  CHECK_THROWS_AS(RdpProfile(RandomizedResponseProfile{1.0}), std::domain_error);
  CHECK_THROWS_AS(RdpProfile(PointGuaranteeProfile{Order::finite(2.0), -0.1}),
                  std::domain_error);
  CHECK_THROWS_AS(RdpProfile(TabulatedProfile{{}}), std::domain_error);
  CHECK_THROWS_AS(RdpProfile(TabulatedProfile{{{2.0, 1.0}, {2.0, 1.5}}}),
                  std::domain_error);
  CHECK_THROWS_AS(RdpProfile(TabulatedProfile{{{0.4, 1.0}}}), std::domain_error);
}

TEST_CASE("rho_at") {
  SUBCASE("gaussian") {
    const RdpProfile g(GaussianProfile{1.0});
    CHECK(g.rho_at(Order::finite(2.0)) == 1.0);
    CHECK(g.rho_at(Order::kl()) == 0.5);
    CHECK(g.rho_at(Order::infinite()) == kInf);
  }
  SUBCASE("randomized response") {
    const RdpProfile rr(RandomizedResponseProfile{0.75});
    CHECK(rr.rho_at(Order::finite(2.0)) ==
          doctest::Approx(std::log(7.0 / 3.0)).epsilon(1e-14));
    CHECK(rr.rho_at(Order::infinite()) ==
          doctest::Approx(std::log(3.0)).epsilon(1e-14));
  }
  SUBCASE("point guarantee") {
    const RdpProfile pt(PointGuaranteeProfile{Order::finite(1.5), 0.75});
    CHECK(pt.rho_at(Order::finite(1.5)) == 0.75);
    CHECK(pt.rho_at(Order::finite(2.0)) == kInf);
    CHECK(pt.rho_at(Order::infinite()) == kInf);
  }
  SUBCASE("tabulated") {
    const RdpProfile table(TabulatedProfile{{{2.0, 1.0}, {4.0, 2.0}}});
    CHECK(table.rho_at(Order::finite(2.0)) == 1.0);
    CHECK(table.rho_at(Order::finite(4.0)) == 2.0);
    CHECK(table.rho_at(Order::finite(1.0)) == kInf);   // below range
    CHECK(table.rho_at(Order::finite(8.0)) == kInf);   // above range
    CHECK(table.rho_at(Order::infinite()) == kInf);
    // Interior: chord in h = (tau-1) rho between (2,1) and (4,2):
    // h(2)=1, h(4)=6, h(3)=3.5 -> rho(3) = 1.75.
    CHECK(table.rho_at(Order::finite(3.0)) == doctest::Approx(1.75).epsilon(1e-14));
  }
}

TEST_CASE("rr profile limits") {
  for (double p : {0.6, 0.75, 0.9}) {
    const RdpProfile rr(RandomizedResponseProfile{p});
    const double eps = std::log(p / (1.0 - p));
    CHECK(std::abs(rr.rho_at(Order::finite(1e4)) - eps) <= 1e-3);
    // KL value by direct evaluation of the KL formula.
    const double kl = p * std::log(p / (1.0 - p)) +
                      (1.0 - p) * std::log((1.0 - p) / p);
    CHECK(std::abs(rr.rho_at(Order::kl()) - kl) <= 1e-9);
  }
}

TEST_CASE("tabulated interpolation is admissible for convex h") {
  // A table sampled from the Gaussian profile: chord interpolation of
  // h(tau) = tau(tau-1)/(2 sigma^2) must never undercut the true h. The
  // comparison lives in h space because dividing by tau - 1 flips the
  // inequality below tau = 1.
  const double sigma = 1.3;
  TabulatedProfile table;
  for (double t = 0.5; t <= 64.0; t *= 2.0) {
    table.points.emplace_back(t, t / (2.0 * sigma * sigma));
  }
  const RdpProfile tabulated(std::move(table));
  const RdpProfile gaussian(GaussianProfile{sigma});
  for (double t = 0.6; t < 64.0; t += 0.7) {
    if (std::abs(t - 1.0) < 0.05) continue;  // table value near tau = 1 is +inf
    const double interp = tabulated.rho_at(Order::finite(t));
    const double truth = gaussian.rho_at(Order::finite(t));
    CHECK((t - 1.0) * interp >= (t - 1.0) * truth - 1e-12);
  }
}

TEST_CASE("validate_profile") {
  std::vector<double> grid;
  for (double t = 0.5; t <= 64.0; t *= 1.3) grid.push_back(t);

  const auto gaussian_report =
      validate_profile(RdpProfile(GaussianProfile{1.0}), grid);
  CHECK(gaussian_report.all_checks_pass());

  const auto rr_report =
      validate_profile(RdpProfile(RandomizedResponseProfile{0.75}), grid);
  CHECK(rr_report.all_checks_pass());
  for (const auto& [tau, finite] : rr_report.finiteness) CHECK(finite);
  for (double t : grid) {
    CHECK(RdpProfile(RandomizedResponseProfile{0.75}).rho_at(Order::finite(t)) <=
          std::log(3.0) + 1e-12);
  }

  const auto table_report = validate_profile(
      RdpProfile(TabulatedProfile{{{2.0, 1.0}, {4.0, 0.1}}}), {2.0, 4.0});
  CHECK_FALSE(table_report.monotonicity_warnings.empty());

  const auto point_report = validate_profile(
      RdpProfile(PointGuaranteeProfile{Order::finite(2.0), 1.0}), grid);
  int finite_count = 0;
  for (const auto& [tau, finite] : point_report.finiteness) {
    finite_count += finite ? 1 : 0;
  }
  CHECK(finite_count <= 1);
}

TEST_CASE("json ingestion") {
  SUBCASE("valid profiles") {
    const auto g = RdpProfile::from_json_text(R"({"type":"gaussian","sigma":1.0})");
    CHECK(std::get<GaussianProfile>(g.variant()).sigma == 1.0);
    const auto rr = RdpProfile::from_json_text(R"({"type":"rr","p":0.75})");
    CHECK(std::get<RandomizedResponseProfile>(rr.variant()).p == 0.75);
    const auto pt =
        RdpProfile::from_json_text(R"({"type":"point","tau":1.5,"rho":0.75})");
    CHECK(std::get<PointGuaranteeProfile>(pt.variant()).rho_star == 0.75);
    const auto table = RdpProfile::from_json_text(
        R"({"type":"table","points":[[2.0,1.0],[4.0,2.0]]})");
    CHECK(std::get<TabulatedProfile>(table.variant()).points.size() == 2);
  }
  SUBCASE("unknown keys are rejected by name") {
    try {
      RdpProfile::from_json_text(R"({"type":"gaussian","sigma":1.0,"mean":0})");
      FAIL("expected invalid_argument");
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("mean") != std::string::npos);
    }
  }
  SUBCASE("malformed input") {
    CHECK_THROWS_AS(RdpProfile::from_json_text("not json"),
                    std::invalid_argument);
    CHECK_THROWS_AS(RdpProfile::from_json_text(R"({"type":"laplace","b":1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(RdpProfile::from_json_text(R"({"type":"gaussian"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(RdpProfile::from_json_text(R"({"type":"rr","p":"x"})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        RdpProfile::from_json_text(R"({"type":"table","points":[[2.0]]})"),
        std::invalid_argument);
    // Schema-valid but domain-invalid values surface as domain errors.
    CHECK_THROWS_AS(RdpProfile::from_json_text(R"({"type":"rr","p":0.4})"),
                    std::domain_error);
    CHECK_THROWS_AS(
        RdpProfile::from_json_text(R"({"type":"point","tau":0.4,"rho":1})"),
        std::domain_error);
  }
}
