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

#ifndef NOONECP_ANALYTICS_HPP
#define NOONECP_ANALYTICS_HPP

// Closed-form success probabilities of the recycled concentration chain.
//
//   P_1 = 2|αβ|²
//   P_k = 2|αβ|^(2^k) / Π_{j=2..k} (|α|^(2^j) + |β|^(2^j))
//
// P_k is the probability that rounds 1..k-1 fail and round k succeeds.
// Everything is evaluated in log space: for k = 10 the raw powers sit in
// the subnormal range, where a direct product loses about nine digits.

#include <optional>
#include <span>
#include <vector>

#include "noonecp/ecp.hpp"

namespace noonecp {

/// Unconditional P_k. Requires 0 < α < 1, k >= 1.
double p_round_closed_form(double alpha, int k);

/// Success probability of round k given that it is reached:
/// 2|α_k β_k|² with α_k² = t_k.
double p_round_conditional_closed_form(double alpha, int k);

/// Σ_{k=1..K} P_k.
double p_total_closed_form(double alpha, int max_rounds);

struct SweepPoint {
  double alpha = 0.0;
  double p_total = 0.0;
  std::vector<double> per_round_p;
  std::optional<double> simulated_p_total;  // set when a cross-check was requested
};

/// `steps` points evenly spaced over [start, stop]; one point gives {start}.
std::vector<double> linear_grid(double start, double stop, int steps);

/// α from 0.01 to 0.999 in 199 uniform points, plus α = 1/√2 (200 in all).
std::vector<double> default_alpha_grid();

/// Closed-form P_total over `grid`. With `cross_check`, each point is also
/// simulated with that protocol (N photons as given).
std::vector<SweepPoint> figure3_sweep(int max_rounds, std::span<const double> grid,
                                      std::optional<Protocol> cross_check = std::nullopt, int n_photons = 2);

}  // namespace noonecp

#endif  // NOONECP_ANALYTICS_HPP
