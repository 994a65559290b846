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

#ifndef NOONECP_TESTS_ORACLES_HPP
#define NOONECP_TESTS_ORACLES_HPP

// Test-only reference routes. None of these call into the code paths they
// are used to check.

#include <cmath>
#include <complex>
#include <random>
#include <string>
#include <vector>

#include "noonecp/fock.hpp"
#include "noonecp/optics.hpp"

namespace noonecp::oracle {

inline BasisKet ket(std::initializer_list<int> occ) { return BasisKet{std::vector<int>(occ)}; }

inline PureState state_of(std::vector<ModeId> modes,
                          std::initializer_list<std::pair<std::vector<int>, Amplitude>> terms) {
  PureState::Terms t;
  for (const auto& [occ, amp] : terms) t[BasisKet{occ}] += amp;
  return PureState(Register(std::move(modes)), std::move(t));
}

inline double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// Beam splitter applied one photon at a time: every input creation operator
// is replaced by U_i1 out1† + U_i2 out2†, using only create() and
// superpose(). Requires an in-place spec (outputs equal inputs).
inline PureState photonwise_beam_splitter(const PureState& state, const BeamSplitterSpec& spec) {
  const auto u = spec.mode_matrix();
  const std::size_t in1 = state.modes().index_of(spec.in1);
  const std::size_t in2 = state.modes().index_of(spec.in2);
  std::vector<std::pair<Amplitude, PureState>> pieces;
  for (const auto& [k, amp] : state.terms()) {
    BasisKet base = k;
    base.occupations[in1] = 0;
    base.occupations[in2] = 0;
    PureState psi(state.modes(), {{base, 1.0}});
    for (int i = 0; i < k.occupations[in1]; ++i) {
      psi = superpose({{u[0][0], create(psi, spec.out1)}, {u[0][1], create(psi, spec.out2)}});
    }
    for (int i = 0; i < k.occupations[in2]; ++i) {
      psi = superpose({{u[1][0], create(psi, spec.out1)}, {u[1][1], create(psi, spec.out2)}});
    }
    const double norm = std::sqrt(factorial(k.occupations[in1]) * factorial(k.occupations[in2]));
    pieces.emplace_back(amp / norm, psi);
  }
  return superpose(pieces);
}

// Random normalized state on `modes` with up to `max_terms` kets and at
// most `max_photons` photons per mode.
inline PureState random_state(std::mt19937_64& rng, const std::vector<ModeId>& modes, int max_photons,
                              int max_terms) {
  std::uniform_int_distribution<int> occ(0, max_photons);
  std::uniform_int_distribution<int> count(1, max_terms);
  std::normal_distribution<double> gauss;
  PureState::Terms t;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    BasisKet k;
    for (std::size_t m = 0; m < modes.size(); ++m) k.occupations.push_back(occ(rng));
    t[k] += Amplitude(gauss(rng), gauss(rng));
  }
  return normalized(PureState(Register(modes), std::move(t)));
}

inline int total_photons_min(const PureState& s) {
  int lo = 1 << 30;
  for (const auto& [k, a] : s.terms()) lo = std::min(lo, k.total());
  return lo;
}

inline int total_photons_max(const PureState& s) {
  int hi = 0;
  for (const auto& [k, a] : s.terms()) hi = std::max(hi, k.total());
  return hi;
}

// Direct evaluation of the probability chain in long double for small k.
inline long double p_round_direct(long double alpha_sq, int k) {
  const long double a2 = alpha_sq;
  const long double b2 = 1.0L - alpha_sq;
  long double num = 2.0L * std::pow(a2 * b2, std::ldexp(1.0L, k - 1));
  long double den = 1.0L;
  for (int j = 2; j <= k; ++j) {
    const long double e = std::ldexp(1.0L, j - 1);  // |α|^(2^j) = (α²)^(2^(j-1))
    den *= std::pow(a2, e) + std::pow(b2, e);
  }
  return num / den;
}

}  // namespace noonecp::oracle

#endif  // NOONECP_TESTS_ORACLES_HPP
