// Copyright 2026 The gkc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "gkc/classical.hpp"
#include "gkc/decompose.hpp"
#include "gkc/error.hpp"
#include "gkc/graph.hpp"
#include "gkc/grover.hpp"
#include "gkc/oracle.hpp"
#include "gkc/pipeline.hpp"
#include "gkc/qasm.hpp"
#include "gkc/route.hpp"
#include "gkc/sim.hpp"

namespace py = pybind11;

namespace {

py::object to_python(const nlohmann::json& value) {
  return py::module_::import("json").attr("loads")(value.dump());
}

gkc::Instance instance(const gkc::Graph& graph, int k) { return gkc::make_instance(graph, k); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grover k-coloring circuit synthesis";

  // GkcError(message, code_name)
  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&] { return py::exception<gkc::Error>(m, "GkcError"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const gkc::Error& e) {
      py::object code = py::str(std::string(gkc::error_name(e.code())));
      PyErr_SetObject(error.get_stored().ptr(), py::make_tuple(e.what(), code).ptr());
    }
  });

  py::class_<gkc::Graph>(m, "Graph")
      .def(py::init<int, std::vector<gkc::Edge>>(), py::arg("num_vertices"), py::arg("edges") = std::vector<gkc::Edge>{})
      .def_property_readonly("num_vertices", &gkc::Graph::num_vertices)
      .def_property_readonly("edges", &gkc::Graph::edges)
      .def("adjacent", &gkc::Graph::adjacent)
      .def_static("from_adjacency", [](const std::string& text) { return gkc::parse_adjacency(text); })
      .def_static("from_edge_list", [](const std::string& text) { return gkc::parse_edge_list(text); })
      .def_static("load", [](const std::string& path) { return gkc::load_graph(path); })
      .def("to_adjacency", [](const gkc::Graph& g) { return gkc::to_adjacency(g); })
      .def("__eq__", [](const gkc::Graph& a, const gkc::Graph& b) { return a == b; })
      .def("__repr__", [](const gkc::Graph& g) {
        return "Graph(" + std::to_string(g.num_vertices()) + " vertices, " + std::to_string(g.num_edges()) + " edges)";
      });

  m.def(
      "solutions",
      [](const gkc::Graph& g, int k) { return gkc::solutions(instance(g, k)).bitstrings; },
      py::arg("graph"), py::arg("k"), "Proper k-colorings as data bitstrings.");

  m.def(
      "synthesize",
      [](const gkc::Graph& g, int k, const std::string& mode, const std::string& basis) {
        const auto inst = instance(g, k);
        const auto b = gkc::parse_basis(basis);
        const auto oracle = gkc::synthesize_oracle(inst, gkc::parse_mode(mode));
        return to_python(gkc::synth_report(inst, oracle, gkc::lower_circuit(oracle.circuit, b), b));
      },
      py::arg("graph"), py::arg("k"), py::arg("mode") = "strict", py::arg("basis") = "native",
      "Oracle layout and gate-count report.");

  m.def(
      "oracle_qasm",
      [](const gkc::Graph& g, int k, const std::string& mode, const std::string& basis) {
        const auto b = gkc::parse_basis(basis);
        const auto oracle = gkc::synthesize_oracle(instance(g, k), gkc::parse_mode(mode));
        return gkc::emit_qasm(gkc::lower_circuit(oracle.circuit, b), {b, {}});
      },
      py::arg("graph"), py::arg("k"), py::arg("mode") = "strict", py::arg("basis") = "native");

  m.def(
      "marked_states",
      [](const gkc::Graph& g, int k, const std::string& mode, bool lowered) {
        const auto oracle = gkc::synthesize_oracle(instance(g, k), gkc::parse_mode(mode));
        const auto circuit = lowered ? gkc::lower_circuit(oracle.circuit) : oracle.circuit;
        return gkc::sim::phase_pattern(circuit, oracle.plan.layout);
      },
      py::arg("graph"), py::arg("k"), py::arg("mode") = "strict", py::arg("lowered") = false,
      "Data states whose phase the oracle flips.");

  m.def(
      "run",
      [](const gkc::Graph& g, int k, const std::string& mode, std::optional<int> iterations,
         std::optional<std::string> topology, std::uint64_t seed, bool lower, const std::string& basis) {
        gkc::RunConfig config;
        config.mode = gkc::parse_mode(mode);
        config.iterations = iterations;
        config.lower = lower;
        config.basis = gkc::parse_basis(basis);
        config.seed = seed;
        if (topology) config.topology = gkc::coupling_from_spec(*topology);
        const auto outcome = gkc::run_pipeline(instance(g, k), config);
        py::dict out;
        out["report"] = to_python(outcome.report);
        out["histogram"] = outcome.histogram;
        out["qasm"] = outcome.qasm ? py::object(py::str(*outcome.qasm)) : py::object(py::none());
        return out;
      },
      py::arg("graph"), py::arg("k"), py::arg("mode") = "strict", py::arg("iterations") = py::none(),
      py::arg("topology") = py::none(), py::arg("seed") = 0, py::arg("lower") = true, py::arg("basis") = "native",
      "Build, optionally lower and route, and simulate the Grover circuit.");

  m.def(
      "cost_table",
      [](int lo, int hi, const std::vector<int>& ks) {
        py::list rows;
        for (const auto& r : gkc::cost_table(lo, hi, ks)) {
          py::dict d;
          d["n"] = r.n;
          d["k"] = r.k;
          d["data_qubits"] = r.data_qubits;
          d["baseline_data_qubits"] = r.baseline_data_qubits;
          d["baseline_ancilla_order"] = r.baseline_ancilla_order;
          d["ancilla_paper"] = r.ancilla_paper;
          d["ancilla_strict"] = r.ancilla_strict;
          d["oracle_gates_paper"] = r.oracle_gates_paper;
          d["oracle_gates_strict"] = r.oracle_gates_strict;
          d["lowered_gates_strict"] = r.lowered_gates_strict;
          rows.append(d);
        }
        return rows;
      },
      py::arg("n_min"), py::arg("n_max"), py::arg("ks"));

  m.def("optimal_iterations", &gkc::optimal_iterations, py::arg("search_space"), py::arg("solution_count"));
  m.def("success_probability", &gkc::grover_success_probability, py::arg("search_space"),
        py::arg("solution_count"), py::arg("iterations"));
  m.def("qubit_ceiling", &gkc::sim::qubit_ceiling);
}
