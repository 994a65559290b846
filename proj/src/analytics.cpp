// Copyright 2026 The noonecp Authors
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

#include "noonecp/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "noonecp/errors.hpp"

namespace noonecp {

namespace {

struct LogCoefficients {
  double la;  // ln α
  double lb;  // ln β
};

LogCoefficients log_coefficients(double alpha, int k) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (k < 1) throw ParameterError("round index must be >= 1");
  return {std::log(alpha), 0.5 * std::log1p(-alpha * alpha)};
}

// ln(α^e + β^e) with e = 2^j.
double log_power_sum(const LogCoefficients& c, int j) {
  const double hi = std::max(c.la, c.lb);
  const double lo = std::min(c.la, c.lb);
  const double gap = std::ldexp(lo - hi, j);  // <= 0
  return std::ldexp(hi, j) + std::log1p(std::exp(gap));
}

}  // namespace

double p_round_closed_form(double alpha, int k) {
  const LogCoefficients c = log_coefficients(alpha, k);
  double log_p = std::numbers::ln2 + std::ldexp(c.la + c.lb, k);
  for (int j = 2; j <= k; ++j) log_p -= log_power_sum(c, j);
  return std::exp(log_p);
}

double p_round_conditional_closed_form(double alpha, int k) {
  const LogCoefficients c = log_coefficients(alpha, k);
  // 2 α^(2^k) β^(2^k) / (α^(2^k) + β^(2^k))²
  return std::exp(std::numbers::ln2 + std::ldexp(c.la + c.lb, k) - 2.0 * log_power_sum(c, k));
}

double p_total_closed_form(double alpha, int max_rounds) {
  if (max_rounds < 1) throw ParameterError("round count K must be positive");
  double total = 0.0;
  for (int k = 1; k <= max_rounds; ++k) total += p_round_closed_form(alpha, k);
  return total;
}

std::vector<double> linear_grid(double start, double stop, int steps) {
  if (steps < 0) throw ParameterError("grid step count must be non-negative");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid.push_back(start);
    return grid;
  }
  for (int i = 0; i < steps; ++i) {
    grid.push_back(start + (stop - start) * static_cast<double>(i) / static_cast<double>(steps - 1));
  }
  return grid;
}

std::vector<double> default_alpha_grid() {
  // Uniform in α, plus the balanced point where the curve peaks sharply.
  std::vector<double> grid = linear_grid(0.01, 0.999, 199);
  const double balanced = std::numbers::sqrt2 / 2.0;
  grid.insert(std::upper_bound(grid.begin(), grid.end(), balanced), balanced);
  return grid;
}

std::vector<SweepPoint> figure3_sweep(int max_rounds, std::span<const double> grid,
                                      std::optional<Protocol> cross_check, int n_photons) {
  if (max_rounds < 1) throw ParameterError("round count K must be positive");
  std::vector<SweepPoint> out;
  out.reserve(grid.size());
  for (const double alpha : grid) {
    SweepPoint point;
    point.alpha = alpha;
    for (int k = 1; k <= max_rounds; ++k) {
      point.per_round_p.push_back(p_round_closed_form(alpha, k));
      point.p_total += point.per_round_p.back();
    }
    if (cross_check) {
      ProtocolConfig config;
      config.protocol = *cross_check;
      config.alpha = alpha;
      config.n_photons = n_photons;
      config.max_rounds = max_rounds;
      point.simulated_p_total = run_schedule(config).p_total;
    }
    out.push_back(std::move(point));
  }
  return out;
}

}  // namespace noonecp
