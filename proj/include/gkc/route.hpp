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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gkc/circuit.hpp"
#include "gkc/graph.hpp"

namespace gkc {

/// Physical qubit connectivity with all-pairs hop distances.
class CouplingGraph {
 public:
  /// Throws IndexOutOfRange, MalformedCoupling or Disconnected.
  CouplingGraph(int num_physical, std::vector<Edge> pairs);

  static CouplingGraph line(int n);
  static CouplingGraph ring(int n);
  /// Row-major rows x cols grid truncated to the first `count` qubits
  /// (all of them when count < 0).
  static CouplingGraph grid(int rows, int cols, int count = -1);

  int num_physical() const noexcept { return n_; }
  const std::vector<Edge>& pairs() const noexcept { return pairs_; }
  const std::vector<int>& neighbors(int p) const { return adjacency_[p]; }
  int distance(int a, int b) const { return distance_[static_cast<std::size_t>(a) * n_ + b]; }
  bool coupled(int a, int b) const { return distance(a, b) == 1; }
  /// Physical qubits from `a` to `b` inclusive along a shortest path.
  std::vector<int> shortest_path(int a, int b) const;

 private:
  int n_ = 0;
  std::vector<Edge> pairs_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> distance_;
};

/// First data line holds the qubit count, then one "a b" pair per line;
/// '#' starts a comment.
CouplingGraph parse_coupling(std::string_view text);
CouplingGraph load_coupling(const std::filesystem::path& path);
std::string to_text(const CouplingGraph& coupling);

/// A .cpl path or one of line:N, ring:N, grid:RxC[:COUNT].
CouplingGraph coupling_from_spec(const std::string& spec);

/// Logical-to-physical placement; injective.
struct Mapping {
  std::vector<int> logical_to_physical;

  static Mapping identity(int num_logical);
  /// -1 marks physical qubits holding no logical qubit.
  std::vector<int> physical_to_logical(int num_physical) const;
  friend bool operator==(const Mapping&, const Mapping&) = default;
};

struct RoutingOptions {
  int extended_set_size = 20;
  double extended_set_weight = 0.5;
  double decay_increment = 0.001;
  int decay_reset_interval = 5;
  /// Forward, backward, forward passes; the last pass's starting placement
  /// is kept. Ignored when `initial_mapping` is set.
  bool reverse_traversal = true;
  std::optional<Mapping> initial_mapping;
  /// Drives tie-breaking between equally scored SWAPs.
  std::uint64_t seed = 0;
};

struct RoutingResult {
  Circuit routed;
  Mapping initial;
  Mapping final;
  int swap_count = 0;
};

/// SABRE routing of a circuit of 1- and 2-qubit gates. The routed circuit
/// acts on physical qubits; roles and initial states follow the initial
/// mapping and measurements follow the final one. Throws
/// TooFewPhysicalQubits or UnloweredGate.
RoutingResult sabre_route(const Circuit& circuit, const CouplingGraph& coupling, const RoutingOptions& options = {});

/// Every gate touches at most two qubits and every 2-qubit gate acts on a
/// coupled pair.
bool verify_constraints(const Circuit& routed, const CouplingGraph& coupling);

/// "final_layout: logical i -> physical p" lines for a QASM trailer.
std::vector<std::string> layout_comments(const Mapping& final);

}  // namespace gkc
