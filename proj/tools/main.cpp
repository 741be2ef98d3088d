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
// Command-line surface: emits trade-off curves, single-order region
// boundaries, delta(epsilon) tables, witness reports, Gaussian comparisons,
// and oracle cross-checks as CSV/JSON for downstream plotting.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rdpfdp/envelope.hpp"
#include "rdpfdp/mechanisms.hpp"
#include "rdpfdp/oracle.hpp"

namespace {

using nlohmann::json;
using namespace rdpfdp;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitVerificationFailure = 2;

// Fixed float formatting: 17 significant digits, '.' separator, so that
// identical run specs produce byte-identical output.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_order(const Order& o) {
  return o.is_infinite() ? std::string("inf") : fmt(o.value());
}

struct OutputTarget {
  std::string path;  // empty = stdout
  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
  }
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_csv() const {
    std::ostringstream os;
    auto emit_row = [&os](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) os << ',';
        os << row[i];
      }
      os << '\n';
    };
    emit_row(header);
    for (const auto& row : rows) emit_row(row);
    return os.str();
  }

  std::string to_json() const {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj;
      for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
      arr.push_back(obj);
    }
    return arr.dump(2) + "\n";
  }

  std::string render(const std::string& format) const {
    return format == "json" ? to_json() : to_csv();
  }
};

// Shared flags; wired into each subcommand that needs them.
struct ProfileOptions {
  std::string inline_json;
  std::string file_path;

  void attach(CLI::App* cmd) {
    auto* a = cmd->add_option("--profile", inline_json, "Inline profile JSON");
    auto* b =
        cmd->add_option("--profile-file", file_path, "Path to profile JSON");
    a->excludes(b);
  }

  RdpProfile load() const {
    if (!inline_json.empty()) return RdpProfile::from_json_text(inline_json);
    if (!file_path.empty()) {
      std::ifstream in(file_path);
      if (!in) {
        throw std::invalid_argument("cannot read profile file: " + file_path);
      }
      std::stringstream ss;
      ss << in.rdbuf();
      return RdpProfile::from_json_text(ss.str());
    }
    throw std::invalid_argument(
        "exactly one of --profile / --profile-file is required");
  }
};

struct SearchOptions {
  OrderSearchConfig cfg;
  std::string infinite_order = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--tau-min", cfg.tau_min, "Smallest searched order");
    cmd->add_option("--tau-max", cfg.tau_max, "Largest searched finite order");
    cmd->add_option("--coarse-grid", cfg.coarse_grid_size,
                    "Coarse log-spaced order grid size");
    cmd->add_option("--refine-iters", cfg.refinement_iterations,
                    "Golden-section refinement iterations");
    cmd->add_option("--infinite-order", infinite_order,
                    "Include the tau=inf constraint: auto|on|off")
        ->check(CLI::IsMember({"auto", "on", "off"}));
  }

  OrderSearchConfig resolve() const {
    OrderSearchConfig out = cfg;
    if (infinite_order == "on") out.include_infinite_order = true;
    if (infinite_order == "off") out.include_infinite_order = false;
    return out;
  }
};

struct OutputOptions {
  std::string format = "csv";
  OutputTarget target;

  void attach(CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output,-o", target.path,
                    "Output path (default: stdout)");
  }
};

std::vector<Order> log_spaced_orders(double tau_min, double tau_max, int n) {
  std::vector<Order> out;
  const double lo = std::log(tau_min);
  const double hi = std::log(tau_max);
  for (int i = 0; i < n; ++i) {
    const double w = static_cast<double>(i) / (n - 1);
    out.push_back(Order::finite(std::exp(lo + w * (hi - lo))));
  }
  return out;
}

int run_tradeoff(const ProfileOptions& prof, const SearchOptions& search,
                 const OutputOptions& out, int alpha_count) {
  const RdpProfile profile = prof.load();
  const TradeoffCurve curve =
      envelope_curve(profile, uniform_alpha_grid(alpha_count), search.resolve());
  CsvTable table;
  table.header = {"alpha", "beta", "tau_active"};
  for (const auto& s : curve.samples) {
    table.rows.push_back({fmt(s.alpha), fmt(s.beta), fmt_order(*s.tau_active)});
  }
  out.target.write(table.render(out.format));
  return kExitOk;
}

int run_region(double tau, double rho, const OutputOptions& out,
               int alpha_count) {
  const SingleOrderRegion region{Order::finite(tau), rho};
  const TradeoffCurve curve =
      sample_curve(region, uniform_alpha_grid(alpha_count));
  CsvTable table;
  table.header = {"alpha", "beta", "binding_direction"};
  for (const auto& s : curve.samples) {
    table.rows.push_back({fmt(s.alpha), fmt(s.beta), to_string(*s.binding)});
  }
  out.target.write(table.render(out.format));
  return kExitOk;
}

int run_delta(const ProfileOptions& prof, const SearchOptions& search,
              const OutputOptions& out, int alpha_count, double eps_min,
              double eps_max, double eps_step) {
  if (!(eps_step > 0.0) || !(eps_max >= eps_min) || !(eps_min >= 0.0)) {
    throw std::invalid_argument("delta: invalid epsilon grid");
  }
  const RdpProfile profile = prof.load();
  const TradeoffCurve curve =
      envelope_curve(profile, uniform_alpha_grid(alpha_count), search.resolve());
  CsvTable table;
  table.header = {"epsilon", "delta"};
  const int steps = static_cast<int>(std::floor((eps_max - eps_min) / eps_step + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double eps = eps_min + i * eps_step;
    table.rows.push_back({fmt(eps), fmt(delta_at(curve, eps))});
  }
  out.target.write(table.render(out.format));
  return kExitOk;
}

int run_witness(const ProfileOptions& prof, const SearchOptions& search,
                const OutputOptions& out, double alpha0, int tau_grid_size) {
  const RdpProfile profile = prof.load();
  const OrderSearchConfig cfg = search.resolve();
  const BernoulliWitness witness = witness_at(profile, alpha0, cfg);
  std::vector<Order> grid =
      log_spaced_orders(cfg.tau_min, cfg.tau_max, tau_grid_size);
  if (std::isfinite(profile.rho_at(Order::infinite()))) {
    grid.push_back(Order::infinite());
  }
  const WitnessVerification verification =
      verify_witness(witness, profile, grid);

  json report;
  report["witness"] = {{"a", witness.a}, {"b", witness.b}};
  report["operating_point"] = {{"alpha", witness.operating_point.alpha},
                               {"beta", witness.operating_point.beta}};
  report["verification"] = {
      {"tau_grid_size", grid.size()},
      {"min_forward_margin", verification.min_forward_margin},
      {"min_reverse_margin", verification.min_reverse_margin},
      {"violations", verification.violations},
  };
  out.target.write(report.dump(2) + "\n");
  return verification.ok() ? kExitOk : kExitVerificationFailure;
}

int run_compare_gaussian(double sigma, const SearchOptions& search,
                         const OutputOptions& out, int alpha_count) {
  const RdpProfile profile((GaussianProfile{sigma}));
  const GaussianMechanismRef ref{sigma};
  const OrderSearchConfig cfg = search.resolve();
  CsvTable table;
  table.header = {"alpha", "envelope_beta", "gaussian_tradeoff", "gap"};
  for (double alpha : uniform_alpha_grid(alpha_count)) {
    const double env = envelope_beta(profile, alpha, cfg).beta;
    const double exact = gaussian_tradeoff(ref, alpha);
    table.rows.push_back({fmt(alpha), fmt(env), fmt(exact), fmt(exact - env)});
  }
  out.target.write(table.render(out.format));
  return kExitOk;
}

int run_verify(const ProfileOptions& prof, const SearchOptions& search,
               const OutputOptions& out, int alpha_count, int oracle_n,
               int tau_grid_size, double tolerance) {
  const RdpProfile profile = prof.load();
  const OrderSearchConfig cfg = search.resolve();
  std::vector<Order> tau_grid =
      log_spaced_orders(cfg.tau_min, cfg.tau_max, tau_grid_size);
  for (Order o : profile.special_orders()) tau_grid.push_back(o);
  if (std::isfinite(profile.rho_at(Order::infinite()))) {
    tau_grid.push_back(Order::infinite());
  }

  json checks = json::array();
  double max_deviation = 0.0;
  for (double alpha : uniform_alpha_grid(alpha_count)) {
    const double env = envelope_beta(profile, alpha, cfg).beta;
    const double oracle = grid_envelope_beta(profile, alpha, tau_grid, oracle_n);
    const double deviation = std::abs(env - oracle);
    max_deviation = std::max(max_deviation, deviation);
    checks.push_back({{"alpha", alpha},
                      {"envelope_beta", env},
                      {"oracle_beta", oracle},
                      {"deviation", deviation}});
  }
  const bool pass = max_deviation <= tolerance;
  json report;
  report["checks"] = checks;
  report["max_deviation"] = max_deviation;
  report["tolerance"] = tolerance;
  report["pass"] = pass;
  out.target.write(report.dump(2) + "\n");
  return pass ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal conversion from an RDP profile to an f-DP trade-off "
               "curve, with (epsilon, delta) extraction, witness mechanisms, "
               "and brute-force verification"};
  app.require_subcommand(1);

  // tradeoff
  auto* tradeoff = app.add_subcommand(
      "tradeoff", "Envelope trade-off curve (alpha, beta, tau_active)");
  ProfileOptions tradeoff_prof;
  SearchOptions tradeoff_search;
  OutputOptions tradeoff_out;
  int tradeoff_alphas = 1001;
  tradeoff_prof.attach(tradeoff);
  tradeoff_search.attach(tradeoff);
  tradeoff_out.attach(tradeoff);
  tradeoff->add_option("--alphas", tradeoff_alphas, "Uniform alpha grid size")
      ->check(CLI::Range(2, 1 << 22));

  // region
  auto* region = app.add_subcommand(
      "region", "Single-order region boundary (alpha, beta, binding)");
  double region_tau = 0.0;
  double region_rho = 0.0;
  OutputOptions region_out;
  int region_alphas = 1001;
  region->add_option("--tau", region_tau, "Renyi order (>= 0.5, inf allowed)")
      ->required();
  region->add_option("--rho", region_rho, "Budget at that order")->required();
  region_out.attach(region);
  region->add_option("--alphas", region_alphas, "Uniform alpha grid size")
      ->check(CLI::Range(2, 1 << 22));

  // delta
  auto* delta = app.add_subcommand("delta", "delta(epsilon) conversion table");
  ProfileOptions delta_prof;
  SearchOptions delta_search;
  OutputOptions delta_out;
  int delta_alphas = 2049;  // >= 2048 bounds the discretization error
  double eps_min = 0.0, eps_max = 8.0, eps_step = 0.01;
  delta_prof.attach(delta);
  delta_search.attach(delta);
  delta_out.attach(delta);
  delta->add_option("--alphas", delta_alphas, "Curve sampling grid size")
      ->check(CLI::Range(2, 1 << 22));
  delta->add_option("--eps-min", eps_min, "Smallest epsilon");
  delta->add_option("--eps-max", eps_max, "Largest epsilon");
  delta->add_option("--eps-step", eps_step, "Epsilon grid step");

  // witness
  auto* witness = app.add_subcommand(
      "witness", "Saturating Bernoulli witness plus verification report");
  ProfileOptions witness_prof;
  SearchOptions witness_search;
  OutputOptions witness_out;
  double alpha0 = 0.0;
  int witness_grid = 200;
  witness_prof.attach(witness);
  witness_search.attach(witness);
  witness_out.attach(witness);
  witness->add_option("--alpha0", alpha0, "Type I error of the witness")
      ->required();
  witness->add_option("--tau-grid-size", witness_grid,
                      "Verification order grid size");

  // compare-gaussian
  auto* compare = app.add_subcommand(
      "compare-gaussian",
      "Envelope vs the exact Gaussian trade-off (optimality gap data)");
  double sigma = 1.0;
  SearchOptions compare_search;
  OutputOptions compare_out;
  int compare_alphas = 1001;
  compare->add_option("--sigma", sigma, "Noise scale")->required();
  compare_search.attach(compare);
  compare_out.attach(compare);
  compare->add_option("--alphas", compare_alphas, "Uniform alpha grid size")
      ->check(CLI::Range(2, 1 << 22));

  // verify
  auto* verify = app.add_subcommand(
      "verify", "Cross-check the envelope against the brute-force oracle");
  ProfileOptions verify_prof;
  SearchOptions verify_search;
  OutputOptions verify_out;
  int verify_alphas = 21;
  int oracle_n = 4096;
  int verify_grid = 50;
  double verify_tol = 2.0 / 4096 + 1e-3;
  verify_prof.attach(verify);
  verify_search.attach(verify);
  verify_out.attach(verify);
  verify->add_option("--alphas", verify_alphas, "Checked alpha grid size");
  verify->add_option("--oracle-n", oracle_n, "Oracle beta grid resolution");
  verify->add_option("--tau-grid-size", verify_grid, "Oracle order grid size");
  verify->add_option("--tol", verify_tol, "Maximum allowed deviation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (tradeoff->parsed()) {
      return run_tradeoff(tradeoff_prof, tradeoff_search, tradeoff_out,
                          tradeoff_alphas);
    }
    if (region->parsed()) {
      return run_region(region_tau, region_rho, region_out, region_alphas);
    }
    if (delta->parsed()) {
      return run_delta(delta_prof, delta_search, delta_out, delta_alphas,
                       eps_min, eps_max, eps_step);
    }
    if (witness->parsed()) {
      return run_witness(witness_prof, witness_search, witness_out, alpha0,
                         witness_grid);
    }
    if (compare->parsed()) {
      return run_compare_gaussian(sigma, compare_search, compare_out,
                                  compare_alphas);
    }
    if (verify->parsed()) {
      return run_verify(verify_prof, verify_search, verify_out, verify_alphas,
                        oracle_n, verify_grid, verify_tol);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
