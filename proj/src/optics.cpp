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

#include "noonecp/optics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "noonecp/errors.hpp"
#include "ladder.hpp"

namespace noonecp {

TaggedState::TaggedState(Register modes, std::vector<TaggedTerm> terms) : modes_(std::move(modes)) {
  for (const auto& t : terms) {
    if (t.ket.occupations.size() != modes_.size()) {
      throw RegisterError("ket length does not match register size");
    }
    if (!std::isfinite(t.probe_phase)) throw ContractError("probe phase must be finite");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const TaggedTerm& a, const TaggedTerm& b) {
    return a.ket != b.ket ? a.ket < b.ket : a.probe_phase < b.probe_phase;
  });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().ket == t.ket &&
        std::abs(terms_.back().probe_phase - t.probe_phase) < kPhaseTolerance) {
      terms_.back().amplitude += t.amplitude;
    } else {
      terms_.push_back(std::move(t));
    }
  }
  std::erase_if(terms_, [](const TaggedTerm& t) { return std::abs(t.amplitude) < kPruneThreshold; });
}

TaggedState::TaggedState(const PureState& state)
    : TaggedState(state.modes(), [&state] {
        std::vector<TaggedTerm> out;
        out.reserve(state.size());
        for (const auto& [ket, amp] : state.terms()) out.push_back({ket, amp, 0.0});
        return out;
      }()) {}

double norm_sq(const TaggedState& state) {
  double sum = 0.0;
  for (const auto& t : state.terms()) sum += std::norm(t.amplitude);
  return sum;
}

std::array<std::array<double, 2>, 2> BeamSplitterSpec::mode_matrix() const {
  const double tr = std::sqrt(transmissivity);
  const double rf = std::sqrt(reflectivity.value_or(1.0 - transmissivity));
  if (convention == BsConvention::kEcp1) {
    return {{{tr, -rf}, {rf, tr}}};
  }
  return {{{rf, tr}, {tr, -rf}}};
}

BeamSplitterSpec BeamSplitterSpec::inverse() const {
  if (convention == BsConvention::kEcp1) {
    // Rotation: undone by its transpose, i.e. with the ports swapped.
    return {out2, out1, in2, in1, transmissivity, convention, reflectivity};
  }
  // Symmetric and orthogonal: self-inverse.
  return {out1, out2, in1, in2, transmissivity, convention, reflectivity};
}

PureState beam_splitter(const PureState& state, const BeamSplitterSpec& spec) {
  const double t = spec.transmissivity;
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterError("beam splitter transmissivity must lie in [0, 1]");
  if (spec.reflectivity) {
    const double r = *spec.reflectivity;
    if (!(r >= 0.0 && r <= 1.0) || std::abs(t + r - 1.0) > 1e-12) {
      throw ParameterError("beam splitter reflectivity must equal 1 - t");
    }
  }
  if (spec.in1 == spec.in2 || spec.out1 == spec.out2) {
    throw RegisterError("beam splitter ports must be distinct");
  }
  const Register& reg = state.modes();
  const std::size_t in1 = reg.index_of(spec.in1);
  const std::size_t in2 = reg.index_of(spec.in2);

  const bool has_out1 = reg.contains(spec.out1);
  const bool has_out2 = reg.contains(spec.out2);
  if (has_out1 != has_out2) {
    throw RegisterError("beam splitter outputs must both be new labels or both be existing modes");
  }

  std::size_t out1 = 0;
  std::size_t out2 = 0;
  Register out_reg = reg;
  if (has_out1) {
    out1 = reg.index_of(spec.out1);
    out2 = reg.index_of(spec.out2);
  } else {
    std::vector<ModeId> labels = reg.modes();
    labels[in1] = spec.out1;
    labels[in2] = spec.out2;
    out_reg = Register(std::move(labels));
    out1 = in1;
    out2 = in2;
  }

  const auto u = spec.mode_matrix();
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) {
    const int n1 = ket.occupations[in1];
    const int n2 = ket.occupations[in2];
    BasisKet base = ket;
    base.occupations[in1] = 0;
    base.occupations[in2] = 0;
    const int m1 = base.occupations[out1];
    const int m2 = base.occupations[out2];
    // |n1,n2> = (in1†)^n1 (in2†)^n2 / √(n1! n2!) |0>; expand both powers.
    const Amplitude prefactor = amp / std::sqrt(detail::factorial(n1) * detail::factorial(n2));
    for (int k1 = 0; k1 <= n1; ++k1) {
      const double c1 = detail::binomial(n1, k1) * std::pow(u[0][0], k1) * std::pow(u[0][1], n1 - k1);
      if (c1 == 0.0) continue;
      for (int k2 = 0; k2 <= n2; ++k2) {
        const double c2 = detail::binomial(n2, k2) * std::pow(u[1][0], k2) * std::pow(u[1][1], n2 - k2);
        if (c2 == 0.0) continue;
        const int p1 = k1 + k2;
        const int p2 = n1 + n2 - p1;
        BasisKet k = base;
        k.occupations[out1] = m1 + p1;
        k.occupations[out2] = m2 + p2;
        out[k] += prefactor * c1 * c2 * detail::raising_factor(m1, p1) * detail::raising_factor(m2, p2);
      }
    }
  }
  return PureState(std::move(out_reg), std::move(out));
}

TaggedState cross_kerr_tag(const TaggedState& state, const ModeId& mode, double per_photon_phase) {
  if (!std::isfinite(per_photon_phase)) throw ParameterError("cross-Kerr phase must be finite");
  const std::size_t slot = state.modes().index_of(mode);
  std::vector<TaggedTerm> out = state.terms();
  for (auto& t : out) t.probe_phase += t.ket.occupations[slot] * per_photon_phase;
  return TaggedState(state.modes(), std::move(out));
}

TaggedState cross_kerr_tag(const PureState& state, const ModeId& mode, double per_photon_phase) {
  return cross_kerr_tag(TaggedState(state), mode, per_photon_phase);
}

std::vector<HomodyneOutcome> homodyne_partition(const TaggedState& state) {
  const double total = norm_sq(state);
  if (std::abs(total - 1.0) > kNormTolerance) {
    throw ContractError("homodyne_partition: input state is not normalized");
  }

  std::vector<TaggedTerm> sorted = state.terms();
  std::stable_sort(sorted.begin(), sorted.end(), [](const TaggedTerm& a, const TaggedTerm& b) {
    return std::abs(a.probe_phase) < std::abs(b.probe_phase);
  });

  std::vector<HomodyneOutcome> outcomes;
  std::size_t begin = 0;
  while (begin < sorted.size()) {
    const double anchor = std::abs(sorted[begin].probe_phase);
    std::size_t end = begin;
    while (end < sorted.size() && std::abs(std::abs(sorted[end].probe_phase) - anchor) < kPhaseTolerance) {
      ++end;
    }
    PureState::Terms terms;
    std::map<BasisKet, double> seen_phase;
    double mass = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& t = sorted[i];
      const auto [it, fresh] = seen_phase.emplace(t.ket, t.probe_phase);
      if (!fresh && std::abs(it->second - t.probe_phase) >= kPhaseTolerance) {
        throw ContractError("homodyne_partition: ket carries both +phi and -phi; probe stays entangled");
      }
      terms[t.ket] += t.amplitude;
      mass += std::norm(t.amplitude);
    }
    PureState branch(state.modes(), std::move(terms));
    outcomes.push_back({anchor, normalized(branch), mass / total});
    begin = end;
  }
  return outcomes;
}

std::vector<DetectionOutcome> detect_photon(const PureState& state, std::span<const ModeId> detectors) {
  if (detectors.empty()) throw ContractError("detect_photon: no detector modes given");
  std::vector<std::size_t> slots;
  for (const auto& d : detectors) {
    const std::size_t s = state.modes().index_of(d);
    if (std::find(slots.begin(), slots.end(), s) != slots.end()) {
      throw RegisterError("detect_photon: duplicate detector mode");
    }
    slots.push_back(s);
  }

  std::vector<PureState::Terms> projected(detectors.size());
  std::vector<double> mass(detectors.size(), 0.0);
  double total = 0.0;
  for (const auto& [ket, amp] : state.terms()) {
    int clicks = 0;
    std::size_t fired = 0;
    for (std::size_t d = 0; d < slots.size(); ++d) {
      const int n = ket.occupations[slots[d]];
      if (n > 0) fired = d;
      clicks += n;
    }
    if (clicks != 1) {
      throw ContractError("detect_photon: branch does not hold exactly one photon across the detectors");
    }
    projected[fired][ket] += amp;
    mass[fired] += std::norm(amp);
    total += std::norm(amp);
  }
  if (total <= 0.0) throw ContractError("detect_photon: zero state");

  std::vector<DetectionOutcome> outcomes;
  for (std::size_t d = 0; d < detectors.size(); ++d) {
    if (projected[d].empty()) continue;
    PureState branch(state.modes(), std::move(projected[d]));
    if (branch.empty()) continue;
    outcomes.push_back({detectors[d], normalized(drop_modes(branch, detectors)), mass[d] / total});
  }
  return outcomes;
}

std::vector<DetectionOutcome> detect_photon(const PureState& state, std::initializer_list<ModeId> detectors) {
  return detect_photon(state, std::span<const ModeId>(detectors.begin(), detectors.size()));
}

PureState phase_flip(const PureState& state, const ModeId& mode) {
  const std::size_t slot = state.modes().index_of(mode);
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) {
    out.emplace(ket, ket.occupations[slot] % 2 ? -amp : amp);
  }
  return PureState(state.modes(), std::move(out));
}

PureState negate_occupied(const PureState& state, const ModeId& mode) {
  const std::size_t slot = state.modes().index_of(mode);
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) {
    out.emplace(ket, ket.occupations[slot] > 0 ? -amp : amp);
  }
  return PureState(state.modes(), std::move(out));
}

}  // namespace noonecp
