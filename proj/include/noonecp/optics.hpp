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

#ifndef NOONECP_OPTICS_HPP
#define NOONECP_OPTICS_HPP

// Linear-optical elements and an idealized cross-Kerr QND readout.
//
// The coherent probe is not simulated. Each branch only carries the phase
// the probe would have picked up, and homodyne detection is modelled as an
// ideal projective measurement of |phase|: an X-quadrature readout cannot
// tell +φ from -φ, so those land in one outcome class.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "noonecp/fock.hpp"

namespace noonecp {

/// Two probe phases fall in one homodyne class iff ||φ1| - |φ2|| < this.
inline constexpr double kPhaseTolerance = 1e-9;

/// Default per-photon probe phase in radians. Only distinguishability
/// matters in the ideal model.
inline constexpr double kDefaultTheta = 0.1;

struct TaggedTerm {
  BasisKet ket;
  Amplitude amplitude;
  double probe_phase = 0.0;
};

/// Pure state whose branches carry an accumulated probe phase.
class TaggedState {
 public:
  /// Merges terms with equal ket and equal phase, then prunes.
  TaggedState(Register modes, std::vector<TaggedTerm> terms);
  /// Lifts an untagged state; every branch gets phase 0.
  explicit TaggedState(const PureState& state);

  [[nodiscard]] const Register& modes() const { return modes_; }
  [[nodiscard]] const std::vector<TaggedTerm>& terms() const { return terms_; }

 private:
  Register modes_;
  std::vector<TaggedTerm> terms_;
};

double norm_sq(const TaggedState& state);

enum class BsConvention {
  // in1 -> √t out1 - √(1-t) out2,  in2 -> √(1-t) out1 + √t out2
  kEcp1,
  // in1 -> √(1-t) out1 + √t out2,  in2 -> √t out1 - √(1-t) out2
  kEcp2,
};

struct BeamSplitterSpec {
  ModeId in1;
  ModeId in2;
  ModeId out1;
  ModeId out2;
  double transmissivity = 0.5;
  BsConvention convention = BsConvention::kEcp2;
  /// 1 - t, when known more precisely than the subtraction would give it.
  std::optional<double> reflectivity;

  /// Row i holds the output amplitudes of input creation operator i.
  [[nodiscard]] std::array<std::array<double, 2>, 2> mode_matrix() const;
  /// The element that undoes this one.
  [[nodiscard]] BeamSplitterSpec inverse() const;
};

/// Rewrites the two input creation operators through the 2x2 mode matrix.
///
/// Output labels are either both already in the register, or both new; in
/// the second case the input slots are relabelled in place. Multi-photon
/// inputs expand binomially with the bosonic √(n!) factors, so the map is
/// unitary on the full Fock space. Throws ParameterError for t outside
/// [0, 1] and RegisterError for unknown or clashing labels.
PureState beam_splitter(const PureState& state, const BeamSplitterSpec& spec);

/// Adds occupation(mode) * per_photon_phase to every branch's probe phase.
TaggedState cross_kerr_tag(const TaggedState& state, const ModeId& mode, double per_photon_phase);
TaggedState cross_kerr_tag(const PureState& state, const ModeId& mode, double per_photon_phase);

struct HomodyneOutcome {
  double phase_class = 0.0;  // shared |probe phase|
  PureState branch;          // renormalized
  double probability = 0.0;
};

/// Groups branches by |probe phase|; classes are returned in ascending
/// phase order. Requires a normalized input. A ket that appears in one
/// class with distinct signed phases would leave the probe entangled and
/// is rejected with ContractError.
std::vector<HomodyneOutcome> homodyne_partition(const TaggedState& state);

struct DetectionOutcome {
  ModeId fired;
  PureState branch;  // detector modes removed, renormalized
  double probability = 0.0;
};

/// Projects onto "exactly one detector fired". Every branch must hold
/// exactly one photon across `detectors`. Outcomes with zero mass are
/// omitted; the rest are listed in detector order.
std::vector<DetectionOutcome> detect_photon(const PureState& state,
                                            std::span<const ModeId> detectors);
std::vector<DetectionOutcome> detect_photon(const PureState& state,
                                            std::initializer_list<ModeId> detectors);

/// Multiplies each branch by (-1)^occupation(mode).
PureState phase_flip(const PureState& state, const ModeId& mode);

/// Negates every branch with at least one photon in `mode`. On a NOON pair
/// this flips the sign of the |0,N> component for any N, and coincides
/// with phase_flip when N is odd.
PureState negate_occupied(const PureState& state, const ModeId& mode);

}  // namespace noonecp

#endif  // NOONECP_OPTICS_HPP
