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

#include "gkc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "gkc/classical.hpp"
#include "gkc/grover.hpp"
#include "gkc/qasm.hpp"
#include "gkc/sim.hpp"

namespace gkc {

using nlohmann::json;

namespace {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

json mapping_json(const Mapping& m) { return m.logical_to_physical; }

}  // namespace

std::vector<CostRow> cost_table(int n_min, int n_max, const std::vector<int>& ks) {
  std::vector<CostRow> rows;
  for (int k : ks) {
    for (int n = n_min; n <= n_max; ++n) {
      const auto instance = make_instance(complete_graph(n), k);
      const auto paper = synthesize_oracle(instance, OracleMode::Paper);
      const auto strict = synthesize_oracle(instance, OracleMode::Strict);
      CostRow row;
      row.n = n;
      row.k = k;
      row.data_qubits = instance.data_width();
      row.baseline_data_qubits = n * k;
      row.baseline_ancilla_order = static_cast<std::int64_t>(n * k) * (n * k);
      row.ancilla_paper = paper.plan.layout.ancilla_count();
      row.ancilla_strict = strict.plan.layout.ancilla_count();
      row.oracle_gates_paper = paper.circuit.size();
      row.oracle_gates_strict = strict.circuit.size();
      row.lowered_gates_strict = lowered_gate_count(strict.circuit);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string cost_csv(const std::vector<CostRow>& rows) {
  std::ostringstream out;
  out << "n,k,data_qubits,baseline_data_qubits,ancilla_paper,ancilla_strict,baseline_ancilla_order,"
         "oracle_gates_paper,oracle_gates_strict,lowered_gates_strict\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.k << ',' << r.data_qubits << ',' << r.baseline_data_qubits << ',' << r.ancilla_paper
        << ',' << r.ancilla_strict << ',' << r.baseline_ancilla_order << ',' << r.oracle_gates_paper << ','
        << r.oracle_gates_strict << ',' << r.lowered_gates_strict << '\n';
  }
  return out.str();
}

json stats_json(const CircuitStats& stats) {
  json by_arity = json::object();
  for (auto [arity, count] : stats.mct_count_by_arity) by_arity[std::to_string(arity)] = count;
  return {{"gate_count", stats.gate_count},
          {"two_qubit_count", stats.two_qubit_count},
          {"depth", stats.depth},
          {"mct_count_by_arity", by_arity}};
}

json layout_json(const QubitLayout& layout) {
  return {{"data", layout.data.count},
          {"edge_ancilla", layout.edge_ancilla.count},
          {"invalid_ancilla", layout.invalid_ancilla.count},
          {"valid_flags", layout.valid_flags.count},
          {"ancilla", layout.ancilla_count()},
          {"output", 1},
          {"total", layout.num_qubits()}};
}

json graph_json(const Graph& graph) {
  json edges = json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({u, v});
  return {{"vertices", graph.num_vertices()}, {"edges", edges}};
}

json synth_report(const Instance& instance, const Oracle& oracle, const Circuit& lowered, Basis basis) {
  return {{"command", "synth"},
          {"graph", graph_json(instance.graph)},
          {"k", instance.k},
          {"bits_per_vertex", instance.bits_per_vertex},
          {"invalid_colors", instance.invalid_colors},
          {"mode", mode_name(oracle.plan.mode)},
          {"basis", basis_name(basis)},
          {"qubits", layout_json(oracle.plan.layout)},
          {"gates", {{"unlowered", stats_json(stats(oracle.circuit))}, {"lowered", stats_json(stats(lowered))}}}};
}

std::vector<std::pair<std::string, double>> top_states(const std::map<std::string, double>& distribution,
                                                       std::size_t count) {
  std::vector<std::pair<std::string, double>> states(distribution.begin(), distribution.end());
  std::stable_sort(states.begin(), states.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  if (states.size() > count) states.resize(count);
  return states;
}

std::string histogram(const std::vector<std::pair<std::string, double>>& states, int width) {
  std::ostringstream out;
  for (const auto& [bits, p] : states) {
    const int bar = static_cast<int>(std::lround(p * width));
    out << bits << " | " << std::string(static_cast<std::size_t>(bar), '#')
        << std::string(static_cast<std::size_t>(width - std::min(bar, width)), ' ') << ' ' << std::fixed
        << std::setprecision(6) << p << '\n';
  }
  return out.str();
}

RunOutcome run_pipeline(const Instance& instance, const RunConfig& config) {
  RunOutcome outcome;
  const auto classical = solutions(instance);
  const auto solution_count = classical.count();
  json report = {{"command", "run"},
                 {"graph", graph_json(instance.graph)},
                 {"k", instance.k},
                 {"mode", mode_name(config.mode)},
                 {"M", solution_count},
                 {"N", classical.space},
                 {"colorable", solution_count > 0}};

  if (solution_count == 0 && !config.iterations) {
    report["message"] = "graph is not " + std::to_string(instance.k) + "-colorable";
    report["t"] = nullptr;
    report["success_probability"] = nullptr;
    report["top_states"] = json::array();
    report["solutions_match"] = true;
    report["lowered"] = false;
    report["routing"] = nullptr;
    outcome.report = std::move(report);
    return outcome;
  }

  auto job = build_grover(instance, config.mode, config.iterations ? config.iterations
                                                                    : std::optional<int>(optimal_iterations(
                                                                          classical.space, solution_count)));
  const auto& layout = job.oracle.plan.layout;
  report["t"] = job.iterations;
  report["qubits"] = layout_json(layout);
  report["gates"] = {{"unlowered", stats_json(stats(job.circuit))}};

  Circuit circuit = job.circuit;
  if (config.lower || config.topology) {
    circuit = lower_circuit(circuit, config.basis);
    report["gates"]["lowered"] = stats_json(stats(circuit));
  }
  report["lowered"] = config.lower || config.topology.has_value();
  report["basis"] = basis_name(config.basis);

  std::vector<int> data_qubits;
  for (int q = layout.data.begin; q < layout.data.end(); ++q) data_qubits.push_back(q);
  QasmOptions qasm_options{config.basis, {}};

  if (config.topology) {
    RoutingOptions options;
    options.seed = config.seed;
    auto routed = sabre_route(circuit, *config.topology, options);
    const bool ok = verify_constraints(routed.routed, *config.topology);
    report["routing"] = {{"physical_qubits", config.topology->num_physical()},
                         {"swap_count", routed.swap_count},
                         {"constraints_ok", ok},
                         {"seed", config.seed},
                         {"initial_layout", mapping_json(routed.initial)},
                         {"final_layout", mapping_json(routed.final)},
                         {"gates", stats_json(stats(routed.routed))}};
    for (auto& q : data_qubits) q = routed.final.logical_to_physical[q];
    qasm_options.trailing_comments = layout_comments(routed.final);
    circuit = std::move(routed.routed);
  } else {
    report["routing"] = nullptr;
  }
  if (report["lowered"].get<bool>()) outcome.qasm = emit_qasm(circuit, qasm_options);

  const auto state = sim::run(circuit);
  const auto distribution = sim::probabilities(state, data_qubits);
  double success = 0.0;
  for (const auto& [bits, p] : distribution) {
    if (classical.bitstrings.count(bits)) success += p;
  }
  const auto top = top_states(distribution, static_cast<std::size_t>(config.top));
  const auto leading = top_states(distribution, solution_count);
  std::set<std::string> leading_set;
  for (const auto& [bits, p] : leading) leading_set.insert(bits);

  json top_json = json::array();
  for (const auto& [bits, p] : top) {
    top_json.push_back({{"state", bits}, {"probability", p}, {"solution", classical.bitstrings.count(bits) > 0}});
  }
  report["success_probability"] = success;
  report["expected_success_probability"] =
      solution_count ? grover_success_probability(classical.space, solution_count, job.iterations) : 0.0;
  report["top_states"] = top_json;
  report["solutions_match"] = leading_set == classical.bitstrings;
  if (solution_count == 0) report["message"] = "graph is not " + std::to_string(instance.k) + "-colorable";
  outcome.histogram = histogram(top);
  outcome.report = std::move(report);
  return outcome;
}

}  // namespace gkc
