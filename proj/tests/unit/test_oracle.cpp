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

#include <gtest/gtest.h>

#include <algorithm>

#include "gkc/classical.hpp"
#include "gkc/error.hpp"
#include "gkc/oracle.hpp"
#include "gkc/sim.hpp"
#include "reference.hpp"

namespace gkc {
namespace {

const Graph kTriangle(3, {{0, 1}, {0, 2}, {1, 2}});

TEST(Oracle, PaperLayoutForTriangle) {
  const auto plan = plan_layout(make_instance(kTriangle, 3), OracleMode::Paper);
  EXPECT_EQ(plan.layout.data.count, 6);
  EXPECT_EQ(plan.layout.edge_ancilla.count, 3);
  EXPECT_EQ(plan.layout.invalid_ancilla.count, 1);
  EXPECT_EQ(plan.layout.valid_flags.count, 0);
  EXPECT_EQ(plan.layout.ancilla_count(), 4);
  EXPECT_EQ(plan.layout.num_qubits(), 11);
}

TEST(Oracle, StrictLayoutUsesValidFlags) {
  const auto plan = plan_layout(make_instance(kTriangle, 3), OracleMode::Strict);
  EXPECT_EQ(plan.layout.valid_flags.count, 3);
  EXPECT_EQ(plan.layout.invalid_ancilla.count, 0);
  EXPECT_EQ(plan.layout.ancilla_count(), 6);
}

TEST(Oracle, NoInvalidHandlingForPowerOfTwo) {
  for (auto mode : {OracleMode::Paper, OracleMode::Strict}) {
    const auto plan = plan_layout(make_instance(kTriangle, 4), mode);
    EXPECT_EQ(plan.layout.invalid_ancilla.count, 0);
    EXPECT_EQ(plan.layout.valid_flags.count, 0);
    EXPECT_EQ(plan.layout.ancilla_count(), 3);
  }
  const auto instance = make_instance(kTriangle, 4);
  try {
    build_invalid_color_detector(plan_layout(instance, OracleMode::Paper), instance);
    ADD_FAILURE() << "expected NoInvalidColors";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoInvalidColors);
  }
}

TEST(Oracle, EdgeBudgetIsMinOfEdgesAndVertices) {
  const Graph path(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(plan_layout(make_instance(path, 2), OracleMode::Strict).layout.edge_ancilla.count, 3);
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(plan_layout(make_instance(k4, 4), OracleMode::Strict).layout.edge_ancilla.count, 4);
  EXPECT_EQ(plan_layout(make_instance(Graph(3, {}), 2), OracleMode::Strict).layout.edge_ancilla.count, 0);
}

TEST(Oracle, ScheduleComparesEveryEdgeOnce) {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto plan = plan_layout(make_instance(k4, 4), OracleMode::Strict);
  std::vector<int> compared(6, 0);
  bool aggregated = false;
  for (const auto& step : plan.edge_schedule) {
    if (step.kind == ScheduleStep::Kind::Compare) ++compared[step.edge];
    if (step.kind == ScheduleStep::Kind::Aggregate) aggregated = true;
    EXPECT_GE(step.slot, 0);
    EXPECT_LT(step.slot, plan.layout.edge_ancilla.count);
  }
  EXPECT_EQ(compared, std::vector<int>(6, 1));
  EXPECT_TRUE(aggregated);
  EXPECT_FALSE(plan.final_slots.empty());
}

// Comparator truth table: f flips exactly when a == b, inputs restored.
TEST(Oracle, ComparatorTruthTable) {
  for (int c = 1; c <= 3; ++c) {
    std::vector<int> a, b;
    for (int i = 0; i < c; ++i) {
      a.push_back(i);
      b.push_back(c + i);
    }
    const int f = 2 * c;
    const auto circuit = build_comparator(a, b, f, 2 * c + 1);
    for (std::uint64_t x = 0; x < (1u << (2 * c)); ++x) {
      const auto av = x & ((1u << c) - 1);
      const auto bv = x >> c;
      const auto out = sim::run(circuit, x);
      const std::uint64_t expected = x | (av == bv ? (1u << f) : 0u);
      ASSERT_NEAR(std::abs(out[expected]), 1.0, 1e-12) << "c=" << c << " x=" << x;
    }
  }
}

TEST(Oracle, ComparatorRejectsBadOperands) {
  const std::vector<int> a = {0, 1}, b = {2}, overlap = {1, 2};
  try {
    build_comparator(a, b, 4, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WidthMismatch);
  }
  try {
    build_comparator(a, overlap, 4, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingOperands);
  }
  const std::vector<int> c = {2, 3};
  try {
    build_comparator(a, c, 3, 5);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingOperands);
  }
}

TEST(Oracle, DetectorFlagsInvalidPatterns) {
  const auto instance = make_instance(Graph(2, {{0, 1}}), 3);
  const auto plan = plan_layout(instance, OracleMode::Paper);
  const auto detector = build_invalid_color_detector(plan, instance);
  const int inv = plan.layout.invalid_ancilla.begin;
  for (std::uint64_t x = 0; x < 16; ++x) {
    const int invalid = ((x & 3) == 3) + ((x >> 2 & 3) == 3);
    const auto out = sim::run(detector, x);
    const std::uint64_t expected = x | (invalid % 2 ? (1u << inv) : 0u);
    ASSERT_NEAR(std::abs(out[expected]), 1.0, 1e-12) << x;
  }
}

TEST(Oracle, PaperTriangleGateBudget) {
  const auto oracle = synthesize_oracle(make_instance(kTriangle, 3), OracleMode::Paper);
  EXPECT_EQ(oracle.circuit.size(), 37u);
  EXPECT_LE(oracle.circuit.size(), 67u);
  EXPECT_EQ(oracle.circuit.num_qubits(), 11);
}

TEST(Oracle, StrictMarksExactlyTheColorings) {
  const std::vector<std::pair<Graph, int>> cases = {
      {kTriangle, 3}, {kTriangle, 2}, {Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 3}, {Graph(2, {}), 3},
      {Graph(3, {{0, 1}, {1, 2}}), 4}};
  for (const auto& [g, k] : cases) {
    const auto instance = make_instance(g, k);
    const auto oracle = synthesize_oracle(instance, OracleMode::Strict);
    EXPECT_EQ(sim::phase_pattern(oracle.circuit, oracle.plan.layout),
              reference::brute_force_colorings(g.num_vertices(), g.edges(), k));
  }
}

TEST(Oracle, PaperModeParityDefect) {
  // Path 0-1-2-3, colors (3, 0, 3, 1): two nonadjacent invalid vertices.
  const auto instance = make_instance(Graph(4, {{0, 1}, {1, 2}, {2, 3}}), 3);
  const auto oracle = synthesize_oracle(instance, OracleMode::Paper);
  const auto marked = sim::phase_pattern(oracle.circuit, oracle.plan.layout);
  const std::string bad = encode_colors(std::vector<int>{3, 0, 3, 1}, 2);
  EXPECT_TRUE(marked.count(bad));
  EXPECT_FALSE(solutions(instance).bitstrings.count(bad));
}

TEST(Oracle, ModeNames) {
  EXPECT_EQ(parse_mode("paper"), OracleMode::Paper);
  EXPECT_EQ(parse_mode("strict"), OracleMode::Strict);
  EXPECT_EQ(mode_name(OracleMode::Paper), "paper");
  EXPECT_THROW(parse_mode("loose"), std::invalid_argument);
}

}  // namespace
}  // namespace gkc
