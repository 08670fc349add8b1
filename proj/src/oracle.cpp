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

#include "gkc/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "gkc/error.hpp"

namespace gkc {

std::string_view mode_name(OracleMode mode) { return mode == OracleMode::Paper ? "paper" : "strict"; }

OracleMode parse_mode(std::string_view text) {
  if (text == "paper") return OracleMode::Paper;
  if (text == "strict") return OracleMode::Strict;
  throw std::invalid_argument("unknown oracle mode '" + std::string(text) + "'");
}

OraclePlan plan_layout(const Instance& instance, OracleMode mode) {
  const int n = instance.num_vertices();
  const int e = instance.graph.num_edges();
  const bool needs_invalid = !instance.invalid_colors.empty();

  OraclePlan plan;
  plan.mode = mode;
  auto& layout = plan.layout;
  layout.num_vertices = n;
  layout.bits_per_vertex = instance.bits_per_vertex;
  layout.data = {0, instance.data_width()};
  layout.edge_ancilla = {layout.data.end(), std::min(e, n)};
  int next = layout.edge_ancilla.end();
  if (mode == OracleMode::Paper) {
    layout.invalid_ancilla = {next, needs_invalid ? 1 : 0};
    next = layout.invalid_ancilla.end();
    layout.valid_flags = {next, 0};
  } else {
    layout.invalid_ancilla = {next, 0};
    layout.valid_flags = {next, needs_invalid ? n : 0};
    next = layout.valid_flags.end();
  }
  layout.output = next;

  std::set<int> free;
  for (int s = 0; s < layout.edge_ancilla.count; ++s) free.insert(s);
  std::vector<std::pair<int, int>> raw;  // (edge, slot) of live comparators
  std::vector<int> aggregates;
  plan.edge_slots.assign(static_cast<std::size_t>(e), -1);

  for (int idx = 0; idx < e; ++idx) {
    const bool last = idx + 1 == e;
    if (free.size() == 1 && !last) {
      if (raw.size() < 2) throw std::logic_error("edge schedule ran out of ancilla slots");
      ScheduleStep fold{ScheduleStep::Kind::Aggregate, -1, *free.begin(), {}};
      for (auto [edge, slot] : raw) fold.sources.push_back(slot);
      plan.edge_schedule.push_back(fold);
      free.erase(fold.slot);
      aggregates.push_back(fold.slot);
      for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        plan.edge_schedule.push_back({ScheduleStep::Kind::Uncompare, it->first, it->second, {}});
        free.insert(it->second);
      }
      raw.clear();
    }
    const int slot = *free.begin();
    free.erase(free.begin());
    plan.edge_schedule.push_back({ScheduleStep::Kind::Compare, idx, slot, {}});
    plan.edge_slots[idx] = slot;
    raw.emplace_back(idx, slot);
  }
  plan.final_slots = aggregates;
  for (auto [edge, slot] : raw) plan.final_slots.push_back(slot);
  std::sort(plan.final_slots.begin(), plan.final_slots.end());
  return plan;
}

Circuit build_comparator(std::span<const int> a, std::span<const int> b, int f, int num_qubits) {
  if (a.size() != b.size() || a.empty()) {
    throw Error(ErrorCode::WidthMismatch, "comparator inputs have widths " + std::to_string(a.size()) + " and " +
                                              std::to_string(b.size()));
  }
  std::vector<int> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  all.push_back(f);
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw Error(ErrorCode::OverlappingOperands, "comparator registers overlap");
  }
  Circuit fragment(num_qubits);
  const int width = static_cast<int>(a.size());
  // Index width-1 is the least significant bit.
  for (int i = width - 1; i >= 0; --i) fragment.append(Gate::cx(a[i], b[i]));
  std::vector<Control> equal;
  for (int q : b) equal.push_back({q, Polarity::Negative});
  fragment.append(Gate::mct(std::move(equal), f));
  for (int i = 0; i < width; ++i) fragment.append(Gate::cx(a[i], b[i]));
  return fragment;
}

Circuit build_invalid_color_detector(const OraclePlan& plan, const Instance& instance) {
  if (instance.invalid_colors.empty()) {
    throw Error(ErrorCode::NoInvalidColors, "k=" + std::to_string(instance.k) + " is a power of two");
  }
  const auto& layout = plan.layout;
  const int c = layout.bits_per_vertex;
  Circuit fragment(layout.num_qubits());
  for (int v = 0; v < layout.num_vertices; ++v) {
    const int target = plan.mode == OracleMode::Paper ? layout.invalid_ancilla[0] : layout.valid_flags[v];
    for (int pattern : instance.invalid_colors) {
      std::vector<Control> controls;
      for (int bit = 0; bit < c; ++bit) {
        const bool one = (pattern >> (c - 1 - bit)) & 1;
        controls.push_back({layout.color_qubit(v, bit), one ? Polarity::Positive : Polarity::Negative});
      }
      fragment.append(Gate::mct(std::move(controls), target));
    }
  }
  return fragment;
}

Oracle synthesize_oracle(const Instance& instance, OracleMode mode) {
  Oracle oracle{plan_layout(instance, mode), {}};
  const auto& plan = oracle.plan;
  const auto& layout = plan.layout;
  const auto& edges = instance.graph.edges();
  const int width = layout.num_qubits();

  Circuit detect(width);
  if (!instance.invalid_colors.empty()) detect = build_invalid_color_detector(plan, instance);

  Circuit compare(width);
  auto comparator_for = [&](int edge, int slot) {
    const auto a = layout.vertex_qubits(edges[edge].first);
    const auto b = layout.vertex_qubits(edges[edge].second);
    return build_comparator(a, b, layout.edge_ancilla[slot], width);
  };
  for (const auto& step : plan.edge_schedule) {
    switch (step.kind) {
      case ScheduleStep::Kind::Compare:
      case ScheduleStep::Kind::Uncompare:
        compare.append(comparator_for(step.edge, step.slot));
        break;
      case ScheduleStep::Kind::Aggregate: {
        std::vector<int> sources;
        for (int s : step.sources) sources.push_back(layout.edge_ancilla[s]);
        const int target = layout.edge_ancilla[step.slot];
        // The target starts at |1>; the trailing X leaves it 1 iff every
        // source reported a bichromatic edge.
        compare.append(Gate::mct(positive(sources), target));
        compare.append(Gate::x(target));
        break;
      }
    }
  }

  std::vector<Control> controls;
  for (int s : plan.final_slots) controls.push_back({layout.edge_ancilla[s], Polarity::Positive});
  if (mode == OracleMode::Paper) {
    if (!layout.invalid_ancilla.empty()) controls.push_back({layout.invalid_ancilla[0], Polarity::Negative});
  } else {
    for (int q = layout.valid_flags.begin; q < layout.valid_flags.end(); ++q) controls.push_back({q, Polarity::Positive});
  }

  Circuit& circuit = oracle.circuit;
  circuit = Circuit(layout.roles(), layout.initial_states());
  circuit.append(detect);
  circuit.append(compare);
  circuit.append(Gate::mct(std::move(controls), layout.output));
  circuit.append(inverse(compare));
  circuit.append(inverse(detect));
  return oracle;
}

Circuit build_oracle(const Instance& instance, OracleMode mode) { return synthesize_oracle(instance, mode).circuit; }

}  // namespace gkc
