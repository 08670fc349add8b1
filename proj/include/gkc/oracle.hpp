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

#include <span>
#include <string_view>
#include <vector>

#include "gkc/circuit.hpp"
#include "gkc/graph.hpp"

namespace gkc {

/// Paper mode detects invalid colors with one shared parity ancilla, so two
/// invalid vertices cancel. Strict mode keeps one validity flag per vertex
/// and is exact for every basis state.
enum class OracleMode { Paper, Strict };

std::string_view mode_name(OracleMode mode);
/// Accepts "paper" or "strict"; throws std::invalid_argument otherwise.
OracleMode parse_mode(std::string_view text);

/// One step of the edge-ancilla schedule. Slots index into the
/// edge-ancilla range of the layout.
struct ScheduleStep {
  enum class Kind { Compare, Aggregate, Uncompare };

  Kind kind = Kind::Compare;
  int edge = -1;             ///< Compare/Uncompare: index into graph.edges()
  int slot = -1;             ///< ancilla written (Aggregate: the target)
  std::vector<int> sources;  ///< Aggregate: slots folded into `slot`

  friend bool operator==(const ScheduleStep&, const ScheduleStep&) = default;
};

struct OraclePlan {
  QubitLayout layout;
  OracleMode mode = OracleMode::Strict;
  std::vector<ScheduleStep> edge_schedule;
  /// Slot each edge's comparator writes, indexed like graph.edges().
  std::vector<int> edge_slots;
  /// Slots holding a comparator or aggregate result when the output MCT
  /// fires; each is 1 iff its edges are all bichromatic.
  std::vector<int> final_slots;
};

/// Register layout and edge schedule. Edges are taken in lexicographic
/// order; once a comparator would take the last free ancilla while edges
/// remain, the live comparator results are folded into that ancilla by an
/// MCT and uncomputed, freeing their slots.
OraclePlan plan_layout(const Instance& instance, OracleMode mode);

/// Leaves `f` flipped iff a == b, with a and b restored: CX ladder
/// computing a xor b into b (least significant bit first), an MCT with
/// negative controls on b targeting f, then the ladder again. Throws
/// WidthMismatch or OverlappingOperands.
Circuit build_comparator(std::span<const int> a, std::span<const int> b, int f, int num_qubits);

/// Pattern-controlled MCTs, one per (vertex, invalid color). Paper mode
/// targets the shared invalid ancilla; strict mode targets each vertex's
/// validity flag. Throws NoInvalidColors when k is a power of two.
Circuit build_invalid_color_detector(const OraclePlan& plan, const Instance& instance);

struct Oracle {
  OraclePlan plan;
  Circuit circuit;
};

/// Full phase oracle: invalid-color detection, edge comparators, output
/// MCT, then the mirror image of the first two phases.
Oracle synthesize_oracle(const Instance& instance, OracleMode mode = OracleMode::Strict);
Circuit build_oracle(const Instance& instance, OracleMode mode = OracleMode::Strict);

}  // namespace gkc
