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

#ifndef NOONECP_ECP_HPP
#define NOONECP_ECP_HPP

// Entanglement concentration rounds for a shared NOON pair on modes (a1, b1).
//
// Both protocols add one auxiliary photon, tag b1 with -θ/N per photon and
// the auxiliary mode with +θ, and keep the ±θ homodyne class. A 50:50 beam
// splitter and a single click then herald the maximally entangled NOON
// state. The 0 class is sent through the same beam splitter and comes out
// as a NOON pair with squared coefficients, which is fed to the next round.
//
//   ECP1  auxiliary photon shared over (a2, b2); tags on b1, b2;
//         beam splitter a2,b2 -> d1,d2.
//   ECP2  auxiliary photon split locally by a variable beam splitter into
//         (c1, c2); tags on b1, c1; beam splitter c1,c2 -> e1,e2.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noonecp/fock.hpp"
#include "noonecp/optics.hpp"

namespace noonecp {

enum class Protocol { kEcp1, kEcp2 };

std::string_view to_string(Protocol protocol);
/// Accepts "ecp1" / "ecp2" (case-insensitive); throws ParameterError.
Protocol parse_protocol(std::string_view text);

namespace modes {
inline const ModeId kA1{"a1"};
inline const ModeId kB1{"b1"};
inline const ModeId kA2{"a2"};
inline const ModeId kB2{"b2"};
inline const ModeId kC1{"c1"};
inline const ModeId kC2{"c2"};
inline const ModeId kD1{"d1"};
inline const ModeId kD2{"d2"};
inline const ModeId kE1{"e1"};
inline const ModeId kE2{"e2"};
}  // namespace modes

struct ProtocolConfig {
  Protocol protocol = Protocol::kEcp2;
  double alpha = 0.70710678118654752440;  // initial |N,0> coefficient, real
  int n_photons = 2;
  int max_rounds = 10;
  double theta = kDefaultTheta;
  double loss_eta = 1.0;  // survival probability per nonlocal pass

  /// √(1 - α²).
  [[nodiscard]] double beta() const;
  /// Throws ParameterError on any out-of-range field.
  void validate() const;

  static ProtocolConfig from_alpha_sq(Protocol protocol, double alpha_sq, int n_photons, int max_rounds);
};

/// α|N,0> + β|0,N> on (first, second), β = √(1-α²). Requires 0 < α < 1.
PureState prepare_less_entangled_noon(double alpha, int n_photons, const ModeId& first, const ModeId& second);

/// (|N,0> + |0,N>)/√2.
PureState maximally_entangled_noon(int n_photons, const ModeId& first, const ModeId& second);

/// α|1,0> + β|0,1>, the shared single-photon resource of ECP1.
PureState prepare_aux_ecp1(double alpha, const ModeId& first, const ModeId& second);

/// √(1-t)|1,0> + √t|0,1>: one photon through a VBS of transmission t.
PureState prepare_aux_ecp2(double t, const ModeId& first, const ModeId& second);

/// VBS transmission for round k: |α|^(2^k) / (|α|^(2^k) + |β|^(2^k)).
double vbs_transmission(double alpha, int round_k);

/// (t_k, 1 - t_k), each evaluated without cancellation.
std::pair<double, double> vbs_split(double alpha, int round_k);

/// Amplitudes on |N,0> and |0,N> of a state on (a1, b1). Throws
/// ContractError when the state holds any other ket. A product state
/// (one amplitude zero) is accepted.
std::pair<Amplitude, Amplitude> noon_coefficients(const PureState& state, int n_photons);

struct DetectorBranch {
  ModeId fired;
  double probability = 0.0;  // conditional on the homodyne class
  bool sign_corrected = false;
  PureState state;  // after correction, canonical global phase
};

struct RoundOutcome {
  int round_index = 1;
  std::optional<PureState> success_state;  // empty if the ±θ class has no weight
  double success_prob = 0.0;               // conditional on reaching this round
  PureState failure_state;
  double failure_prob = 0.0;
  std::optional<double> vbs_transmission_used;
  std::vector<DetectorBranch> success_detections;
  std::vector<DetectorBranch> failure_detections;
};

/// One concentration round on a NOON pair over (a1, b1).
///
/// The auxiliary resource is built from the configured α for round k, so
/// the input must be the state the previous k-1 failures produce. The
/// sign correction after a click on the second detector negates the |0,N>
/// component; both detector outcomes are reported.
RoundOutcome run_round(const PureState& state, const ProtocolConfig& config, int round_k);

struct RoundRecord {
  int round = 1;
  std::optional<double> vbs_transmission;  // ECP2 only
  double p_conditional = 0.0;
  double p_unconditional = 0.0;
  double success_fidelity = 0.0;  // vs (|N,0>+|0,N>)/√2; 0 when no success branch
};

struct Schedule {
  std::vector<RoundRecord> per_round;
  double p_total = 0.0;
};

/// Runs config.max_rounds rounds, recycling each failure branch.
std::vector<RoundOutcome> run_rounds(const ProtocolConfig& config);

/// Per-round success probabilities and their sum. Lossless.
Schedule run_schedule(const ProtocolConfig& config);

/// ECP1 success probabilities scale by η² (two nonlocal passes of the
/// auxiliary photon). ECP2 keeps its photon local and is unchanged.
Schedule apply_loss_model(const Schedule& schedule, const ProtocolConfig& config);

}  // namespace noonecp

#endif  // NOONECP_ECP_HPP
