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

#ifndef NOONECP_FOCK_HPP
#define NOONECP_FOCK_HPP

// Sparse pure states over a fixed register of named bosonic modes.
//
// A PureState stores only the occupation-number kets that carry a
// non-negligible amplitude. Every operation returns a new value; states are
// never mutated after construction.

#include <complex>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace noonecp {

using Amplitude = std::complex<double>;

/// Terms with |amplitude| below this are dropped after every operation.
inline constexpr double kPruneThreshold = 1e-12;

/// Tolerance on Σ|amplitude|² = 1 for inputs that must be normalized.
inline constexpr double kNormTolerance = 1e-10;

struct ModeId {
  std::string label;

  ModeId() = default;
  ModeId(std::string l) : label(std::move(l)) {}  // NOLINT(google-explicit-constructor)
  ModeId(const char* l) : label(l) {}             // NOLINT(google-explicit-constructor)

  auto operator<=>(const ModeId&) const = default;
  bool operator==(const ModeId&) const = default;
};

/// Ordered list of unique mode labels.
class Register {
 public:
  /// Throws ConfigError if `modes` is empty or holds a duplicate label.
  explicit Register(std::vector<ModeId> modes);

  [[nodiscard]] std::size_t size() const { return modes_.size(); }
  [[nodiscard]] const std::vector<ModeId>& modes() const { return modes_; }
  [[nodiscard]] bool contains(const ModeId& mode) const;
  /// Throws RegisterError for an unknown label.
  [[nodiscard]] std::size_t index_of(const ModeId& mode) const;

  bool operator==(const Register&) const = default;

 private:
  std::vector<ModeId> modes_;
};

/// Photon counts, one entry per register slot.
struct BasisKet {
  std::vector<int> occupations;

  [[nodiscard]] int total() const;

  auto operator<=>(const BasisKet&) const = default;
  bool operator==(const BasisKet&) const = default;
};

class PureState {
 public:
  using Terms = std::map<BasisKet, Amplitude>;

  /// Validates ket shapes against the register and prunes negligible terms.
  PureState(Register modes, Terms terms);

  [[nodiscard]] const Register& modes() const { return modes_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] bool empty() const { return terms_.empty(); }

  /// Amplitude on `ket`, zero if absent.
  [[nodiscard]] Amplitude amplitude(const BasisKet& ket) const;

 private:
  Register modes_;
  Terms terms_;
};

PureState vacuum(std::vector<ModeId> modes);

/// Applies (a†)^n on `mode`: occupation m becomes m+n with factor √((m+n)!/m!).
/// The result is not renormalized.
PureState create(const PureState& state, const ModeId& mode, int n = 1);

/// Linear combination Σ c_i |ψ_i⟩ over states sharing one register.
PureState superpose(std::span<const std::pair<Amplitude, PureState>> terms);
PureState superpose(std::initializer_list<std::pair<Amplitude, PureState>> terms);

double norm_sq(const PureState& state);

/// ⟨a|b⟩. Registers must match.
Amplitude inner_product(const PureState& a, const PureState& b);

/// |⟨a|b⟩|² for normalized states on one register.
double fidelity_up_to_global_phase(const PureState& a, const PureState& b);

PureState scaled(const PureState& state, Amplitude factor);

/// Throws ContractError for a zero state.
PureState normalized(const PureState& state);

/// |a⟩ ⊗ |b⟩ on the concatenated register; labels must be disjoint.
PureState tensor(const PureState& a, const PureState& b);

/// Rotates the global phase so the first stored term is real and positive.
PureState canonical_global_phase(const PureState& state);

/// Keeps only the listed modes, dropping the others. Every term must have
/// the same occupation pattern on the dropped modes.
PureState drop_modes(const PureState& state, std::span<const ModeId> dropped);

std::string to_string(const PureState& state);

}  // namespace noonecp

#endif  // NOONECP_FOCK_HPP
