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

#include "noonecp/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "noonecp/errors.hpp"
#include "ladder.hpp"

namespace noonecp {

namespace {

void prune(PureState::Terms& terms) {
  std::erase_if(terms, [](const auto& kv) { return std::abs(kv.second) < kPruneThreshold; });
}

void require_same_register(const PureState& a, const PureState& b, const char* what) {
  if (a.modes() != b.modes()) {
    throw RegisterError(std::string(what) + ": register mismatch");
  }
}

void require_normalized(const PureState& s, const char* what) {
  if (std::abs(norm_sq(s) - 1.0) > kNormTolerance) {
    throw ContractError(std::string(what) + ": input state is not normalized");
  }
}

}  // namespace

Register::Register(std::vector<ModeId> modes) : modes_(std::move(modes)) {
  if (modes_.empty()) throw ConfigError("register must contain at least one mode");
  std::set<ModeId> seen;
  for (const auto& m : modes_) {
    if (m.label.empty()) throw ConfigError("mode label must be non-empty");
    if (!seen.insert(m).second) throw ConfigError("duplicate mode label '" + m.label + "'");
  }
}

bool Register::contains(const ModeId& mode) const {
  return std::find(modes_.begin(), modes_.end(), mode) != modes_.end();
}

std::size_t Register::index_of(const ModeId& mode) const {
  const auto it = std::find(modes_.begin(), modes_.end(), mode);
  if (it == modes_.end()) throw RegisterError("unknown mode '" + mode.label + "'");
  return static_cast<std::size_t>(it - modes_.begin());
}

int BasisKet::total() const { return std::accumulate(occupations.begin(), occupations.end(), 0); }

PureState::PureState(Register modes, Terms terms) : modes_(std::move(modes)), terms_(std::move(terms)) {
  for (const auto& [ket, amp] : terms_) {
    if (ket.occupations.size() != modes_.size()) {
      throw RegisterError("ket length does not match register size");
    }
    if (std::any_of(ket.occupations.begin(), ket.occupations.end(), [](int n) { return n < 0; })) {
      throw ContractError("negative occupation number");
    }
    if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
      throw ContractError("non-finite amplitude");
    }
  }
  prune(terms_);
}

Amplitude PureState::amplitude(const BasisKet& ket) const {
  const auto it = terms_.find(ket);
  return it == terms_.end() ? Amplitude{} : it->second;
}

PureState vacuum(std::vector<ModeId> modes) {
  Register reg(std::move(modes));
  BasisKet ket{std::vector<int>(reg.size(), 0)};
  return PureState(reg, {{ket, 1.0}});
}

PureState create(const PureState& state, const ModeId& mode, int n) {
  if (n < 1) throw ParameterError("create: photon count must be positive");
  const std::size_t slot = state.modes().index_of(mode);
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) {
    BasisKet raised = ket;
    const int m = raised.occupations[slot];
    raised.occupations[slot] = m + n;
    out[raised] += amp * detail::raising_factor(m, n);
  }
  return PureState(state.modes(), std::move(out));
}

PureState superpose(std::span<const std::pair<Amplitude, PureState>> terms) {
  if (terms.empty()) throw ContractError("superpose: empty term list");
  const Register& reg = terms.front().second.modes();
  PureState::Terms out;
  for (const auto& [c, psi] : terms) {
    if (psi.modes() != reg) throw RegisterError("superpose: register mismatch");
    for (const auto& [ket, amp] : psi.terms()) out[ket] += c * amp;
  }
  return PureState(reg, std::move(out));
}

PureState superpose(std::initializer_list<std::pair<Amplitude, PureState>> terms) {
  return superpose(std::span<const std::pair<Amplitude, PureState>>(terms.begin(), terms.size()));
}

double norm_sq(const PureState& state) {
  double sum = 0.0;
  for (const auto& [ket, amp] : state.terms()) sum += std::norm(amp);
  return sum;
}

Amplitude inner_product(const PureState& a, const PureState& b) {
  require_same_register(a, b, "inner_product");
  Amplitude sum{};
  // Walk the smaller map and look up in the larger one.
  const bool a_small = a.size() <= b.size();
  const PureState& small = a_small ? a : b;
  const PureState& large = a_small ? b : a;
  for (const auto& [ket, amp] : small.terms()) {
    const Amplitude other = large.amplitude(ket);
    sum += a_small ? std::conj(amp) * other : std::conj(other) * amp;
  }
  return sum;
}

double fidelity_up_to_global_phase(const PureState& a, const PureState& b) {
  require_same_register(a, b, "fidelity");
  require_normalized(a, "fidelity");
  require_normalized(b, "fidelity");
  return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

PureState scaled(const PureState& state, Amplitude factor) {
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) out.emplace(ket, amp * factor);
  return PureState(state.modes(), std::move(out));
}

PureState normalized(const PureState& state) {
  const double n2 = norm_sq(state);
  if (n2 <= 0.0) throw ContractError("cannot normalize the zero state");
  return scaled(state, 1.0 / std::sqrt(n2));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<ModeId> labels = a.modes().modes();
  labels.insert(labels.end(), b.modes().modes().begin(), b.modes().modes().end());
  Register reg(std::move(labels));  // rejects overlapping labels
  PureState::Terms out;
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      BasisKet k = ka;
      k.occupations.insert(k.occupations.end(), kb.occupations.begin(), kb.occupations.end());
      out.emplace(std::move(k), va * vb);
    }
  }
  return PureState(std::move(reg), std::move(out));
}

PureState canonical_global_phase(const PureState& state) {
  if (state.empty()) return state;
  const Amplitude lead = state.terms().begin()->second;
  return scaled(state, std::conj(lead) / std::abs(lead));
}

PureState drop_modes(const PureState& state, std::span<const ModeId> dropped) {
  std::vector<bool> drop(state.modes().size(), false);
  for (const auto& m : dropped) drop[state.modes().index_of(m)] = true;

  std::vector<ModeId> kept;
  for (std::size_t i = 0; i < drop.size(); ++i) {
    if (!drop[i]) kept.push_back(state.modes().modes()[i]);
  }
  Register reg(std::move(kept));

  std::optional<std::vector<int>> pattern;
  PureState::Terms out;
  for (const auto& [ket, amp] : state.terms()) {
    std::vector<int> removed;
    BasisKet k;
    for (std::size_t i = 0; i < drop.size(); ++i) {
      (drop[i] ? removed : k.occupations).push_back(ket.occupations[i]);
    }
    if (!pattern) {
      pattern = removed;
    } else if (*pattern != removed) {
      throw ContractError("drop_modes: dropped modes are entangled with the rest");
    }
    out[k] += amp;
  }
  return PureState(std::move(reg), std::move(out));
}

std::string to_string(const PureState& state) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < state.modes().size(); ++i) {
    os << (i ? "," : "") << state.modes().modes()[i].label;
  }
  os << "]";
  bool first = true;
  for (const auto& [ket, amp] : state.terms()) {
    os << (first ? " " : " + ") << "(" << amp.real() << (amp.imag() < 0 ? "-" : "+")
       << std::abs(amp.imag()) << "i)|";
    for (std::size_t i = 0; i < ket.occupations.size(); ++i) {
      os << (i ? "," : "") << ket.occupations[i];
    }
    os << ">";
    first = false;
  }
  if (first) os << " 0";
  return os.str();
}

}  // namespace noonecp
