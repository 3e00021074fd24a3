// Copyright 2026 The rbsim Authors
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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rbsim/rb.hpp"
#include "rbsim/report.hpp"

namespace py = pybind11;
using namespace rbsim;

PYBIND11_MODULE(_rbsim, m) {
    m.doc() = "three-qubit randomized-benchmarking simulation toolkit";

    py::class_<CliffordTableau>(m, "CliffordTableau")
        .def_readonly("n", &CliffordTableau::n)
        .def("serialize", &CliffordTableau::serialize)
        .def_static("deserialize", &CliffordTableau::deserialize)
        .def("is_valid", &CliffordTableau::is_valid)
        .def("key", &CliffordTableau::key)
        .def("__eq__", [](const CliffordTableau& a, const CliffordTableau& b) {
            return a == b;
        })
        .def("__repr__", [](const CliffordTableau& c) {
            return "<CliffordTableau n=" + std::to_string(c.n) + ">";
        });

    m.def("identity_tableau", &identity_tableau);
    m.def("compose", &compose);
    m.def("inverse", &inverse);
    m.def(
        "sample_uniform",
        [](int n, uint64_t seed) {
            RandomStream rng(seed);
            return sample_uniform(n, rng);
        },
        py::arg("n"), py::arg("seed"));
    m.def("group_order", [](int n) { return group_order(n).order; });

    py::enum_<Gateset1Q>(m, "Gateset1Q")
        .value("PulsesOnly", Gateset1Q::PulsesOnly)
        .value("PulsesAndVz", Gateset1Q::PulsesAndVz);

    py::class_<ConnectivityGraph>(m, "ConnectivityGraph")
        .def_static("all_to_all", &ConnectivityGraph::all_to_all)
        .def_static("omit", &ConnectivityGraph::omit)
        .def("has_directed", &ConnectivityGraph::has_directed)
        .def("has_undirected", &ConnectivityGraph::has_undirected);

    py::class_<PrimitiveCircuit>(m, "PrimitiveCircuit")
        .def_readonly("n", &PrimitiveCircuit::n)
        .def_readonly("total_duration", &PrimitiveCircuit::total_duration)
        .def_readonly("scheduled", &PrimitiveCircuit::scheduled)
        .def("__len__",
             [](const PrimitiveCircuit& c) { return c.gates.size(); })
        .def("__str__", [](const PrimitiveCircuit& c) {
            return serialize_circuit(c);
        });

    m.def("decompose_1q", &decompose_1q, py::arg("clifford"),
          py::arg("gateset") = Gateset1Q::PulsesOnly);
    m.def("decompose_2q", &decompose_2q, py::arg("clifford"),
          py::arg("gateset") = Gateset1Q::PulsesOnly);
    m.def("decompose_3q", &decompose_3q, py::arg("clifford"), py::arg("conn"),
          py::arg("gateset") = Gateset1Q::PulsesAndVz);
    m.def("verify", &verify);
    m.def("schedule",
          [](const PrimitiveCircuit& c) { return schedule(c, GateDurations{}); });
    m.def("circuit_tableau", &circuit_tableau);

    py::enum_<Calibration>(m, "Calibration")
        .value("A", Calibration::A)
        .value("B", Calibration::B);

    py::class_<DeviceModel>(m, "DeviceModel")
        .def_static("reference_device", &DeviceModel::reference_device)
        .def_static("from_json_text", &DeviceModel::from_json_text)
        .def_static("from_json_file", &DeviceModel::from_json_file)
        .def("to_json_text", &DeviceModel::to_json_text)
        .def("validate", &DeviceModel::validate)
        .def_readonly("n", &DeviceModel::n)
        .def_readwrite("connectivity", &DeviceModel::connectivity)
        .def_readonly("t1", &DeviceModel::t1)
        .def_readonly("t2", &DeviceModel::t2);

    py::class_<NoiseModel>(m, "NoiseModel")
        .def(py::init<>())
        .def_readwrite("depol_1q", &NoiseModel::depol_1q)
        .def_readwrite("depol_2q", &NoiseModel::depol_2q)
        .def_readwrite("enable_damping", &NoiseModel::enable_damping)
        .def_readwrite("enable_zz", &NoiseModel::enable_zz)
        .def_readwrite("depol_per_clifford", &NoiseModel::depol_per_clifford)
        .def_static("from_json_text", &NoiseModel::from_json_text)
        .def("to_json_text", &NoiseModel::to_json_text);

    py::enum_<ObservableMode>(m, "ObservableMode")
        .value("Joint", ObservableMode::Joint)
        .value("Marginal", ObservableMode::Marginal);

    py::class_<RBPartition>(m, "RBPartition")
        .def_static("parse", &RBPartition::parse)
        .def("label", &RBPartition::label)
        .def_readonly("subsets", &RBPartition::subsets);

    py::class_<RBSpec>(m, "RBSpec")
        .def(py::init<>())
        .def_readwrite("partition", &RBSpec::partition)
        .def_readwrite("lengths", &RBSpec::lengths)
        .def_readwrite("seeds", &RBSpec::seeds)
        .def_readwrite("ratio_1q_per_2q", &RBSpec::ratio_1q_per_2q)
        .def_readwrite("observable", &RBSpec::observable)
        .def_readwrite("bootstrap", &RBSpec::bootstrap)
        .def_static("default_lengths", &RBSpec::default_lengths);

    py::class_<DecayFit>(m, "DecayFit")
        .def_readonly("a", &DecayFit::a)
        .def_readonly("alpha", &DecayFit::alpha)
        .def_readonly("b", &DecayFit::b)
        .def_readonly("a_err", &DecayFit::a_err)
        .def_readonly("alpha_err", &DecayFit::alpha_err)
        .def_readonly("b_err", &DecayFit::b_err)
        .def_readonly("residual", &DecayFit::residual)
        .def_readonly("degenerate", &DecayFit::degenerate);

    py::class_<SubsetCurve>(m, "SubsetCurve")
        .def_readonly("lengths", &SubsetCurve::lengths)
        .def_readonly("survival", &SubsetCurve::survival)
        .def_readonly("mean", &SubsetCurve::mean)
        .def_readonly("stderr", &SubsetCurve::stderr_);

    py::class_<SubsetResult>(m, "SubsetResult")
        .def_readonly("qubits", &SubsetResult::qubits)
        .def_readonly("fit", &SubsetResult::fit)
        .def_readonly("epc", &SubsetResult::epc)
        .def_readonly("epc_err", &SubsetResult::epc_err)
        .def_readonly("curve", &SubsetResult::curve);

    py::class_<RBResult>(m, "RBResult")
        .def_readonly("subsets", &RBResult::subsets)
        .def_readonly("master_seed", &RBResult::master_seed);

    m.def("run_experiment", &run_experiment, py::arg("spec"), py::arg("device"),
          py::arg("noise"), py::arg("master_seed"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("fit_decay",
          [](const std::vector<std::tuple<double, double, double>>& pts,
             double b0) {
              std::vector<DecayPoint> curve;
              for (const auto& [mm, mean, se] : pts) curve.push_back({mm, mean, se});
              return fit_decay(curve, b0);
          },
          py::arg("points"), py::arg("b0_init"));

    m.def("epc_from_alpha", &epc_from_alpha);
    m.def("alpha_from_epc", &alpha_from_epc);
    m.def("epg_from_epc", &epg_from_epc);
    m.def("epg_from_epc_compounded", &epg_from_epc_compounded);
    m.def("extract_2q_epg", &extract_2q_epg, py::arg("epc_2q_clifford"),
          py::arg("epg_1q_a"), py::arg("epg_1q_b"), py::arg("n1_a"),
          py::arg("n1_b"), py::arg("n_cnot") = 1.5);

    py::class_<Prediction>(m, "Prediction")
        .def_readonly("alpha", &Prediction::alpha)
        .def_readonly("epc", &Prediction::epc);

    m.def(
        "predict_alpha_3q",
        [](double alpha_1q, double alpha_2q, double n1, double n2) {
            return predict_alpha_3q({alpha_1q, alpha_2q, n1, n2});
        },
        py::arg("alpha_1q"), py::arg("alpha_2q"), py::arg("n1"), py::arg("n2"));
    m.def("predict_alpha_3q_general", &predict_alpha_3q_general);
    m.def("coherence_limit_3q_epc", &coherence_limit_3q_epc);
    m.def("coherence_limit_epg", &coherence_limit_epg);
    m.def("standard_partitions", &standard_partitions);

    py::class_<SynthStats>(m, "SynthStats")
        .def_readonly("n", &SynthStats::n)
        .def_readonly("samples", &SynthStats::samples)
        .def_readonly("avg_cnot", &SynthStats::avg_cnot)
        .def_readonly("se_cnot", &SynthStats::se_cnot)
        .def_readonly("avg_1q", &SynthStats::avg_1q)
        .def_readonly("avg_1q_with_idles", &SynthStats::avg_1q_with_idles)
        .def_readonly("avg_vz", &SynthStats::avg_vz)
        .def_readonly("avg_duration", &SynthStats::avg_duration)
        .def_readonly("verify_rate", &SynthStats::verify_rate);
    m.def("synth_stats",
          [](int n, const ConnectivityGraph& conn, int samples, uint64_t seed) {
              return synth_stats(n, conn, samples, seed);
          },
          py::arg("n"), py::arg("conn"), py::arg("samples"), py::arg("seed"));
}
