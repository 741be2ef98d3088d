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

#include "rdpfdp/profile.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace rdpfdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void validate_variant(const RdpProfile::Variant& v) {
  if (const auto* g = std::get_if<GaussianProfile>(&v)) {
    if (!(g->sigma > 0.0) || std::isinf(g->sigma)) {
      throw std::domain_error("gaussian profile: sigma must be positive and finite");
    }
  } else if (const auto* r = std::get_if<RandomizedResponseProfile>(&v)) {
    if (!(r->p > 0.5 && r->p < 1.0)) {
      throw std::domain_error("rr profile: p must be in (0.5, 1) exclusive");
    }
  } else if (const auto* pt = std::get_if<PointGuaranteeProfile>(&v)) {
    if (!(pt->rho_star >= 0.0) || std::isinf(pt->rho_star)) {
      throw std::domain_error("point profile: rho must be finite and nonnegative");
    }
  } else if (const auto* t = std::get_if<TabulatedProfile>(&v)) {
    if (t->points.empty()) {
      throw std::domain_error("table profile: needs at least one point");
    }
    double prev = -kInf;
    for (const auto& [tau, rho] : t->points) {
      if (!(tau >= 0.5) || std::isinf(tau)) {
        throw std::domain_error("table profile: tau values must be finite and >= 0.5");
      }
      if (tau <= prev) {
        throw std::domain_error("table profile: tau values must be strictly increasing");
      }
      if (!(rho >= 0.0) || std::isinf(rho)) {
        throw std::domain_error("table profile: rho values must be finite and nonnegative");
      }
      prev = tau;
    }
  }
}

double tabulated_rho_at(const TabulatedProfile& table, Order tau) {
  if (tau.is_infinite()) return kInf;
  const double t = tau.value();
  const auto& pts = table.points;
  if (t < pts.front().first || t > pts.back().first) return kInf;
  // Exact knot hits return the tabulated value; this also covers a table
  // knot at tau = 1 where h/(tau-1) is indeterminate.
  auto it = std::lower_bound(
      pts.begin(), pts.end(), t,
      [](const std::pair<double, double>& p, double x) { return p.first < x; });
  if (it != pts.end() && it->first == t) return it->second;
  const auto& hi = *it;
  const auto& lo = *std::prev(it);
  auto h = [](const std::pair<double, double>& p) {
    return (p.first - 1.0) * p.second;
  };
  const double w = (t - lo.first) / (hi.first - lo.first);
  const double h_interp = (1.0 - w) * h(lo) + w * h(hi);
  if (std::abs(t - 1.0) < 1e-12) return kInf;
  return std::max(0.0, h_interp / (t - 1.0));
}

}  // namespace

RdpProfile::RdpProfile(Variant v) : variant_(std::move(v)) {
  validate_variant(variant_);
}

double RdpProfile::rho_at(Order tau) const {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GaussianProfile>) {
          if (tau.is_infinite()) return kInf;
          return tau.value() / (2.0 * p.sigma * p.sigma);
        } else if constexpr (std::is_same_v<T, RandomizedResponseProfile>) {
          return renyi_divergence(p.p, 1.0 - p.p, tau);
        } else if constexpr (std::is_same_v<T, PointGuaranteeProfile>) {
          if (tau.is_infinite() && p.tau_star.is_infinite()) return p.rho_star;
          if (!tau.is_infinite() && !p.tau_star.is_infinite() &&
              std::abs(tau.value() - p.tau_star.value()) <= 1e-12) {
            return p.rho_star;
          }
          return kInf;
        } else {
          return tabulated_rho_at(p, tau);
        }
      },
      variant_);
}

std::vector<Order> RdpProfile::special_orders() const {
  std::vector<Order> out;
  if (const auto* pt = std::get_if<PointGuaranteeProfile>(&variant_)) {
    if (!pt->tau_star.is_infinite()) out.push_back(pt->tau_star);
  } else if (const auto* t = std::get_if<TabulatedProfile>(&variant_)) {
    for (const auto& [tau, rho] : t->points) out.push_back(Order::finite(tau));
  }
  return out;
}

namespace {

using nlohmann::json;

double require_number(const json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw std::invalid_argument(std::string("profile JSON: missing key \"") +
                                key + "\"");
  }
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    throw std::invalid_argument(std::string("profile JSON: key \"") + key +
                                "\" must be a number");
  }
  return v.get<double>();
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!allowed.count(it.key())) {
      throw std::invalid_argument("profile JSON: unknown key \"" + it.key() +
                                  "\"");
    }
  }
}

}  // namespace

RdpProfile RdpProfile::from_json_text(const std::string& text) {
  json obj;
  try {
    obj = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("profile JSON: parse error: ") +
                                e.what());
  }
  if (!obj.is_object() || !obj.contains("type") ||
      !obj.at("type").is_string()) {
    throw std::invalid_argument(
        "profile JSON: expected an object with a string key \"type\"");
  }
  const std::string type = obj.at("type").get<std::string>();
  if (type == "gaussian") {
    reject_unknown_keys(obj, {"type", "sigma"});
    return RdpProfile(GaussianProfile{require_number(obj, "sigma")});
  }
  if (type == "rr") {
    reject_unknown_keys(obj, {"type", "p"});
    return RdpProfile(RandomizedResponseProfile{require_number(obj, "p")});
  }
  if (type == "point") {
    reject_unknown_keys(obj, {"type", "tau", "rho"});
    return RdpProfile(PointGuaranteeProfile{
        Order::finite(require_number(obj, "tau")), require_number(obj, "rho")});
  }
  if (type == "table") {
    reject_unknown_keys(obj, {"type", "points"});
    if (!obj.contains("points") || !obj.at("points").is_array()) {
      throw std::invalid_argument(
          "profile JSON: key \"points\" must be an array of [tau, rho] pairs");
    }
    TabulatedProfile table;
    for (const auto& row : obj.at("points")) {
      if (!row.is_array() || row.size() != 2 || !row[0].is_number() ||
          !row[1].is_number()) {
        throw std::invalid_argument(
            "profile JSON: each entry of \"points\" must be a [tau, rho] pair");
      }
      table.points.emplace_back(row[0].get<double>(), row[1].get<double>());
    }
    return RdpProfile(std::move(table));
  }
  throw std::invalid_argument("profile JSON: unknown type \"" + type + "\"");
}

ProfileValidationReport validate_profile(const RdpProfile& profile,
                                         const std::vector<double>& tau_grid) {
  ProfileValidationReport report;
  double prev_finite_rho = -kInf;
  double prev_finite_tau = 0.0;
  for (double t : tau_grid) {
    const Order tau = Order::finite(t);
    const double rho = profile.rho_at(tau);
    const bool finite = std::isfinite(rho);
    report.finiteness.emplace_back(t, finite);
    if (rho < 0.0) report.nonnegative = false;
    if (finite) {
      if (prev_finite_rho > rho) {
        report.monotonicity_warnings.push_back(
            "rho decreases from tau=" + std::to_string(prev_finite_tau) +
            " to tau=" + std::to_string(t));
      }
      prev_finite_rho = rho;
      prev_finite_tau = t;
    }
  }
  return report;
}

}  // namespace rdpfdp
