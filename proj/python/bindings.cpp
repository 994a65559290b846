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

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "noonecp/analytics.hpp"
#include "noonecp/ecp.hpp"
#include "noonecp/errors.hpp"
#include "noonecp/fock.hpp"
#include "noonecp/optics.hpp"

namespace py = pybind11;
using namespace noonecp;

namespace {

std::vector<ModeId> to_modes(const std::vector<std::string>& labels) {
  return {labels.begin(), labels.end()};
}

py::dict terms_dict(const PureState& s) {
  py::dict d;
  for (const auto& [ket, amp] : s.terms()) {
    d[py::tuple(py::cast(ket.occupations))] = amp;
  }
  return d;
}

PureState state_from_dict(const std::vector<std::string>& labels, const py::dict& terms) {
  PureState::Terms out;
  for (const auto& [key, value] : terms) {
    out[BasisKet{key.cast<std::vector<int>>()}] += value.cast<Amplitude>();
  }
  return PureState(Register(to_modes(labels)), std::move(out));
}

}  // namespace

PYBIND11_MODULE(_noonecp, m) {
  m.doc() = "Exact Fock-space simulator of NOON-state entanglement concentration";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<RegisterError>(m, "RegisterError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);

  py::enum_<Protocol>(m, "Protocol").value("ECP1", Protocol::kEcp1).value("ECP2", Protocol::kEcp2);
  py::enum_<BsConvention>(m, "BsConvention")
      .value("ECP1", BsConvention::kEcp1)
      .value("ECP2", BsConvention::kEcp2);

  py::class_<PureState>(m, "PureState")
      .def(py::init(&state_from_dict), py::arg("modes"), py::arg("terms"))
      .def_property_readonly("modes",
                             [](const PureState& s) {
                               std::vector<std::string> out;
                               for (const auto& mode : s.modes().modes()) out.push_back(mode.label);
                               return out;
                             })
      .def_property_readonly("terms", &terms_dict)
      .def("amplitude", [](const PureState& s, const std::vector<int>& occ) { return s.amplitude({occ}); })
      .def("__len__", &PureState::size)
      .def("__repr__", [](const PureState& s) { return "PureState(" + to_string(s) + ")"; });

  m.def("vacuum", [](const std::vector<std::string>& labels) { return vacuum(to_modes(labels)); });
  m.def("create", [](const PureState& s, const std::string& mode, int n) { return create(s, mode, n); },
        py::arg("state"), py::arg("mode"), py::arg("n") = 1);
  m.def("superpose", [](const std::vector<std::pair<Amplitude, PureState>>& terms) { return superpose(terms); });
  m.def("norm_sq", py::overload_cast<const PureState&>(&norm_sq));
  m.def("fidelity", &fidelity_up_to_global_phase);
  m.def("tensor", &tensor);
  m.def("phase_flip", [](const PureState& s, const std::string& mode) { return phase_flip(s, mode); });
  m.def(
      "beam_splitter",
      [](const PureState& s, const std::string& in1, const std::string& in2, const std::string& out1,
         const std::string& out2, double t, BsConvention convention) {
        return beam_splitter(s, {in1, in2, out1, out2, t, convention});
      },
      py::arg("state"), py::arg("in1"), py::arg("in2"), py::arg("out1"), py::arg("out2"),
      py::arg("t") = 0.5, py::arg("convention") = BsConvention::kEcp2);
  m.def(
      "homodyne_partition",
      [](const PureState& s, const std::vector<std::pair<std::string, double>>& tags) {
        TaggedState tagged(s);
        for (const auto& [mode, phase] : tags) tagged = cross_kerr_tag(tagged, mode, phase);
        py::list out;
        for (const auto& o : homodyne_partition(tagged)) out.append(py::make_tuple(o.phase_class, o.branch, o.probability));
        return out;
      },
      py::arg("state"), py::arg("tags"),
      "Tags the listed modes with per-photon probe phases, then partitions by |phase|. "
      "Returns (phase_class, branch, probability) tuples.");

  m.def(
      "prepare_less_entangled_noon",
      [](double alpha, int n) { return prepare_less_entangled_noon(alpha, n, modes::kA1, modes::kB1); },
      py::arg("alpha"), py::arg("n"));
  m.def("vbs_transmission", &vbs_transmission, py::arg("alpha"), py::arg("round_k"));

  py::class_<ProtocolConfig>(m, "ProtocolConfig")
      .def(py::init([](Protocol protocol, double alpha, int n, int rounds, double theta, double eta) {
             ProtocolConfig c;
             c.protocol = protocol;
             c.alpha = alpha;
             c.n_photons = n;
             c.max_rounds = rounds;
             c.theta = theta;
             c.loss_eta = eta;
             c.validate();
             return c;
           }),
           py::arg("protocol") = Protocol::kEcp2, py::arg("alpha") = 0.70710678118654752440, py::arg("n") = 2,
           py::arg("rounds") = 10, py::arg("theta") = kDefaultTheta, py::arg("eta") = 1.0)
      .def_readonly("protocol", &ProtocolConfig::protocol)
      .def_readonly("alpha", &ProtocolConfig::alpha)
      .def_readonly("n", &ProtocolConfig::n_photons)
      .def_readonly("rounds", &ProtocolConfig::max_rounds)
      .def_readonly("theta", &ProtocolConfig::theta)
      .def_readonly("eta", &ProtocolConfig::loss_eta)
      .def_property_readonly("beta", &ProtocolConfig::beta);

  py::class_<RoundOutcome>(m, "RoundOutcome")
      .def_readonly("round_index", &RoundOutcome::round_index)
      .def_readonly("success_state", &RoundOutcome::success_state)
      .def_readonly("success_prob", &RoundOutcome::success_prob)
      .def_readonly("failure_state", &RoundOutcome::failure_state)
      .def_readonly("failure_prob", &RoundOutcome::failure_prob)
      .def_readonly("vbs_transmission_used", &RoundOutcome::vbs_transmission_used);
  m.def("run_round", &run_round, py::arg("state"), py::arg("config"), py::arg("round_k"));

  py::class_<RoundRecord>(m, "RoundRecord")
      .def_readonly("round", &RoundRecord::round)
      .def_readonly("vbs_transmission", &RoundRecord::vbs_transmission)
      .def_readonly("p_conditional", &RoundRecord::p_conditional)
      .def_readonly("p_unconditional", &RoundRecord::p_unconditional)
      .def_readonly("success_fidelity", &RoundRecord::success_fidelity);
  py::class_<Schedule>(m, "Schedule")
      .def_readonly("per_round", &Schedule::per_round)
      .def_readonly("p_total", &Schedule::p_total);
  m.def("run_schedule", &run_schedule, py::arg("config"));
  m.def("apply_loss_model", &apply_loss_model, py::arg("schedule"), py::arg("config"));

  m.def("p_round_closed_form", &p_round_closed_form, py::arg("alpha"), py::arg("k"));
  m.def("p_total_closed_form", &p_total_closed_form, py::arg("alpha"), py::arg("rounds"));

  py::class_<SweepPoint>(m, "SweepPoint")
      .def_readonly("alpha", &SweepPoint::alpha)
      .def_readonly("p_total", &SweepPoint::p_total)
      .def_readonly("per_round_p", &SweepPoint::per_round_p)
      .def_readonly("simulated_p_total", &SweepPoint::simulated_p_total);
  m.def(
      "figure3_sweep",
      [](int rounds, const std::vector<double>& grid, std::optional<Protocol> cross_check, int n) {
        return figure3_sweep(rounds, grid, cross_check, n);
      },
      py::arg("rounds") = 10, py::arg("grid") = default_alpha_grid(), py::arg("cross_check") = py::none(),
      py::arg("n") = 2);
}
