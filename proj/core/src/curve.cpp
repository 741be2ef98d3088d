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

#include "rdpfdp/curve.hpp"

#include <stdexcept>

namespace rdpfdp {

std::string to_string(BindingDirection d) {
  switch (d) {
    case BindingDirection::kForward:
      return "forward";
    case BindingDirection::kReverse:
      return "reverse";
    case BindingDirection::kBoth:
      return "both";
  }
  return "unknown";
}

std::vector<std::string> curve_violations(const TradeoffCurve& curve,
                                          double convexity_tol,
                                          double diagonal_tol) {
  std::vector<std::string> out;
  const auto& s = curve.samples;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].beta > 1.0 - s[i].alpha + diagonal_tol) {
      out.push_back("beta above diagonal at alpha=" +
                    std::to_string(s[i].alpha));
    }
    if (i > 0) {
      if (s[i].alpha <= s[i - 1].alpha) {
        out.push_back("alpha grid not strictly increasing at index " +
                      std::to_string(i));
      }
      if (s[i].beta > s[i - 1].beta + diagonal_tol) {
        out.push_back("beta increasing at alpha=" + std::to_string(s[i].alpha));
      }
    }
  }
  // Midpoint convexity on consecutive triples, interpolated at the middle
  // sample's alpha.
  for (std::size_t i = 2; i < s.size(); ++i) {
    const auto& a = s[i - 2];
    const auto& m = s[i - 1];
    const auto& c = s[i];
    const double lam = (c.alpha - m.alpha) / (c.alpha - a.alpha);
    const double chord = lam * a.beta + (1.0 - lam) * c.beta;
    if (m.beta > chord + convexity_tol) {
      out.push_back("convexity violated at alpha=" + std::to_string(m.alpha));
    }
  }
  return out;
}

void check_alpha_grid(const std::vector<double>& alphas) {
  double prev = -1.0;
  for (double a : alphas) {
    if (!(a >= 0.0 && a <= 1.0)) {
      throw std::domain_error("alpha grid value outside [0,1]");
    }
    if (a <= prev) {
      throw std::domain_error("alpha grid must be strictly increasing");
    }
    prev = a;
  }
}

std::vector<double> uniform_alpha_grid(int n) {
  if (n < 2) throw std::domain_error("alpha grid needs at least 2 points");
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  }
  out.back() = 1.0;
  return out;
}

}  // namespace rdpfdp
