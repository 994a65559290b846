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

#include "noonecp/ecp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

#include "noonecp/errors.hpp"

namespace noonecp {

namespace {

struct Layout {
  ModeId aux1;
  ModeId aux2;
  ModeId tagged;  // auxiliary mode read by the second cross-Kerr probe
  ModeId out1;
  ModeId out2;
  BsConvention convention;
};

Layout layout_for(Protocol protocol) {
  using namespace modes;
  if (protocol == Protocol::kEcp1) return {kA2, kB2, kB2, kD1, kD2, BsConvention::kEcp1};
  return {kC1, kC2, kC1, kE1, kE2, BsConvention::kEcp2};
}

void require_open_unit(double x, const char* what) {
  if (!(x > 0.0 && x < 1.0)) throw ParameterError(std::string(what) + " must lie in (0, 1)");
}

PureState single_photon(double amp_first, double amp_second, const ModeId& first, const ModeId& second) {
  const PureState vac = vacuum({first, second});
  return superpose({{amp_first, create(vac, first)}, {amp_second, create(vac, second)}});
}

PureState vbs_photon(double t, double r, const ModeId& first, const ModeId& second) {
  const PureState photon = create(vacuum({first, second}), first);
  return beam_splitter(photon, {first, second, first, second, t, BsConvention::kEcp2, r});
}

// 50:50 beam splitter, single click, sign correction on a second-detector click.
std::vector<DetectorBranch> herald(const PureState& branch, const Layout& layout) {
  const PureState mixed =
      beam_splitter(branch, {layout.aux1, layout.aux2, layout.out1, layout.out2, 0.5, layout.convention, std::nullopt});
  std::vector<DetectorBranch> out;
  for (auto& click : detect_photon(mixed, {layout.out1, layout.out2})) {
    const bool flip = click.fired == layout.out2;
    PureState corrected = flip ? negate_occupied(click.branch, modes::kB1) : click.branch;
    out.push_back({click.fired, click.probability, flip, canonical_global_phase(corrected)});
  }
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (fidelity_up_to_global_phase(out.front().state, out[i].state) < 1.0 - 1e-9) {
      throw std::logic_error("heralded branches disagree after sign correction");
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(Protocol protocol) { return protocol == Protocol::kEcp1 ? "ecp1" : "ecp2"; }

Protocol parse_protocol(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "ecp1") return Protocol::kEcp1;
  if (lower == "ecp2") return Protocol::kEcp2;
  throw ParameterError("unknown protocol '" + std::string(text) + "' (expected ecp1 or ecp2)");
}

double ProtocolConfig::beta() const { return std::sqrt(1.0 - alpha * alpha); }

void ProtocolConfig::validate() const {
  require_open_unit(alpha, "alpha");
  if (n_photons < 1) throw ParameterError("photon number N must be positive");
  if (max_rounds < 1) throw ParameterError("round count K must be positive");
  if (!std::isfinite(theta) || std::abs(theta) < kPhaseTolerance) {
    throw ParameterError("theta must be finite and distinguishable from 0");
  }
  if (!(loss_eta >= 0.0 && loss_eta <= 1.0)) throw ParameterError("loss eta must lie in [0, 1]");
}

ProtocolConfig ProtocolConfig::from_alpha_sq(Protocol protocol, double alpha_sq, int n_photons, int max_rounds) {
  require_open_unit(alpha_sq, "alpha^2");
  ProtocolConfig c;
  c.protocol = protocol;
  c.alpha = std::sqrt(alpha_sq);
  c.n_photons = n_photons;
  c.max_rounds = max_rounds;
  c.validate();
  return c;
}

PureState prepare_less_entangled_noon(double alpha, int n_photons, const ModeId& first, const ModeId& second) {
  require_open_unit(alpha, "alpha");
  if (n_photons < 1) throw ParameterError("photon number N must be positive");
  const double beta = std::sqrt(1.0 - alpha * alpha);
  const PureState vac = vacuum({first, second});
  // create() carries √(N!); divide it out to get the number state |N>.
  const PureState n0 = normalized(create(vac, first, n_photons));
  const PureState zero_n = normalized(create(vac, second, n_photons));
  return superpose({{alpha, n0}, {beta, zero_n}});
}

PureState maximally_entangled_noon(int n_photons, const ModeId& first, const ModeId& second) {
  return prepare_less_entangled_noon(0.70710678118654752440, n_photons, first, second);
}

PureState prepare_aux_ecp1(double alpha, const ModeId& first, const ModeId& second) {
  require_open_unit(alpha, "alpha");
  return single_photon(alpha, std::sqrt(1.0 - alpha * alpha), first, second);
}

PureState prepare_aux_ecp2(double t, const ModeId& first, const ModeId& second) {
  if (!(t >= 0.0 && t <= 1.0)) throw ParameterError("VBS transmission must lie in [0, 1]");
  return vbs_photon(t, 1.0 - t, first, second);
}

std::pair<double, double> vbs_split(double alpha, int round_k) {
  require_open_unit(alpha, "alpha");
  if (round_k < 1) throw ParameterError("round index must be >= 1");
  const double beta = std::sqrt(1.0 - alpha * alpha);
  // t = 1 / (1 + (β/α)^(2^k)), in log space so neither power underflows.
  const double log_ratio = std::ldexp(std::log(beta) - std::log(alpha), round_k);
  return {1.0 / (1.0 + std::exp(log_ratio)), 1.0 / (1.0 + std::exp(-log_ratio))};
}

double vbs_transmission(double alpha, int round_k) { return vbs_split(alpha, round_k).first; }

std::pair<Amplitude, Amplitude> noon_coefficients(const PureState& state, int n_photons) {
  if (state.modes() != Register({modes::kA1, modes::kB1})) {
    throw ContractError("expected a state on (a1, b1)");
  }
  const BasisKet n0{{n_photons, 0}};
  const BasisKet zero_n{{0, n_photons}};
  for (const auto& [ket, amp] : state.terms()) {
    if (ket != n0 && ket != zero_n) throw ContractError("state is not of NOON form " + to_string(state));
  }
  if (state.empty()) throw ContractError("zero state");
  return {state.amplitude(n0), state.amplitude(zero_n)};
}

RoundOutcome run_round(const PureState& state, const ProtocolConfig& config, int round_k) {
  config.validate();
  noon_coefficients(state, config.n_photons);
  if (std::abs(norm_sq(state) - 1.0) > kNormTolerance) throw ContractError("run_round: input not normalized");

  const auto [t, r] = vbs_split(config.alpha, round_k);
  const Layout layout = layout_for(config.protocol);

  RoundOutcome outcome{round_k, std::nullopt, 0.0, state, 0.0, std::nullopt, {}, {}};

  PureState aux = config.protocol == Protocol::kEcp1
                      ? single_photon(std::sqrt(t), std::sqrt(r), layout.aux1, layout.aux2)
                      : vbs_photon(t, r, layout.aux1, layout.aux2);
  if (config.protocol == Protocol::kEcp2) outcome.vbs_transmission_used = t;

  const PureState joint = tensor(state, aux);
  const TaggedState tagged =
      cross_kerr_tag(cross_kerr_tag(joint, modes::kB1, -config.theta / config.n_photons), layout.tagged,
                     config.theta);

  bool have_failure = false;
  for (const auto& cls : homodyne_partition(tagged)) {
    if (std::abs(cls.phase_class - std::abs(config.theta)) < kPhaseTolerance) {
      outcome.success_prob = cls.probability;
      outcome.success_detections = herald(cls.branch, layout);
      outcome.success_state = outcome.success_detections.front().state;
    } else if (cls.phase_class < kPhaseTolerance) {
      outcome.failure_prob = cls.probability;
      outcome.failure_detections = herald(cls.branch, layout);
      outcome.failure_state = outcome.failure_detections.front().state;
      have_failure = true;
    } else {
      throw ContractError("unexpected homodyne class; input does not match round " + std::to_string(round_k));
    }
  }
  if (!have_failure) throw ContractError("round left no failure branch");
  return outcome;
}

std::vector<RoundOutcome> run_rounds(const ProtocolConfig& config) {
  config.validate();
  std::vector<RoundOutcome> out;
  out.reserve(static_cast<std::size_t>(config.max_rounds));
  PureState state = prepare_less_entangled_noon(config.alpha, config.n_photons, modes::kA1, modes::kB1);
  for (int k = 1; k <= config.max_rounds; ++k) {
    out.push_back(run_round(state, config, k));
    state = out.back().failure_state;
  }
  return out;
}

Schedule run_schedule(const ProtocolConfig& config) {
  const PureState target = maximally_entangled_noon(config.n_photons, modes::kA1, modes::kB1);
  Schedule schedule;
  double reach = 1.0;  // probability that every earlier round failed
  for (const auto& round : run_rounds(config)) {
    RoundRecord rec;
    rec.round = round.round_index;
    rec.vbs_transmission = round.vbs_transmission_used;
    rec.p_conditional = round.success_prob;
    rec.p_unconditional = reach * round.success_prob;
    rec.success_fidelity = round.success_state ? fidelity_up_to_global_phase(*round.success_state, target) : 0.0;
    reach *= round.failure_prob;
    schedule.p_total += rec.p_unconditional;
    schedule.per_round.push_back(rec);
  }
  return schedule;
}

Schedule apply_loss_model(const Schedule& schedule, const ProtocolConfig& config) {
  if (!(config.loss_eta >= 0.0 && config.loss_eta <= 1.0)) throw ParameterError("loss eta must lie in [0, 1]");
  if (config.protocol == Protocol::kEcp2) return schedule;
  const double survive = config.loss_eta * config.loss_eta;
  Schedule out = schedule;
  out.p_total = 0.0;
  for (auto& rec : out.per_round) {
    rec.p_conditional *= survive;
    rec.p_unconditional *= survive;
    out.p_total += rec.p_unconditional;
  }
  return out;
}

}  // namespace noonecp
