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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gkc/circuit.hpp"
#include "gkc/decompose.hpp"
#include "gkc/graph.hpp"
#include "gkc/oracle.hpp"
#include "gkc/route.hpp"

namespace gkc {

/// One row of the qubit/gate cost comparison, evaluated on the complete
/// graph K_n.
struct CostRow {
  int n = 0;
  int k = 0;
  int data_qubits = 0;           ///< n * ceil(log2 k)
  int baseline_data_qubits = 0;  ///< n * k, one-hot SAT reduction
  std::int64_t baseline_ancilla_order = 0;  ///< (n * k)^2
  int ancilla_paper = 0;
  int ancilla_strict = 0;
  std::size_t oracle_gates_paper = 0;   ///< MCT counted as one gate
  std::size_t oracle_gates_strict = 0;
  std::size_t lowered_gates_strict = 0;
};

std::vector<CostRow> cost_table(int n_min, int n_max, const std::vector<int>& ks);
std::string cost_csv(const std::vector<CostRow>& rows);

nlohmann::json stats_json(const CircuitStats& stats);
nlohmann::json layout_json(const QubitLayout& layout);
nlohmann::json graph_json(const Graph& graph);

/// Report for the synth subcommand; `lowered` is the lowered oracle.
nlohmann::json synth_report(const Instance& instance, const Oracle& oracle, const Circuit& lowered, Basis basis);

struct RunConfig {
  OracleMode mode = OracleMode::Strict;
  std::optional<int> iterations;
  bool lower = true;
  Basis basis = Basis::Native;
  std::optional<CouplingGraph> topology;
  std::uint64_t seed = 0;
  int top = 10;
};

struct RunOutcome {
  nlohmann::json report;
  std::string histogram;
  /// Emitted circuit (lowered, and routed when a topology is given).
  std::optional<std::string> qasm;
};

/// Builds, optionally lowers and routes, then simulates the Grover circuit.
/// An uncolorable instance without an explicit iteration count yields a
/// report with M = 0 and no circuit.
RunOutcome run_pipeline(const Instance& instance, const RunConfig& config);

/// Most probable entries first, ties broken by bitstring.
std::vector<std::pair<std::string, double>> top_states(const std::map<std::string, double>& distribution,
                                                       std::size_t count);
std::string histogram(const std::vector<std::pair<std::string, double>>& states, int width = 40);

}  // namespace gkc
