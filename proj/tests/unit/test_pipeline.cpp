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

#include "gkc/pipeline.hpp"
#include "gkc/sim.hpp"
#include "qasm_check.hpp"

namespace gkc {
namespace {

TEST(Pipeline, CostTableFormulas) {
  const std::vector<int> ks = {2, 3, 4, 8};
  const auto rows = cost_table(2, 6, ks);
  ASSERT_EQ(rows.size(), 20u);
  for (const auto& r : rows) {
    int c = 0;
    while ((1 << c) < r.k) ++c;
    EXPECT_EQ(r.data_qubits, r.n * c);
    EXPECT_EQ(r.baseline_data_qubits, r.n * r.k);
    EXPECT_EQ(r.baseline_ancilla_order, static_cast<std::int64_t>(r.n * r.k) * (r.n * r.k));
    const int edges = r.n * (r.n - 1) / 2;
    EXPECT_EQ(r.ancilla_paper, std::min(edges, r.n) + (r.k == (1 << c) ? 0 : 1));
    EXPECT_EQ(r.ancilla_strict, std::min(edges, r.n) + (r.k == (1 << c) ? 0 : r.n));
  }
}

TEST(Pipeline, CostTableTriangle) {
  const auto rows = cost_table(3, 3, {3});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].data_qubits, 6);
  EXPECT_EQ(rows[0].baseline_data_qubits, 9);
  EXPECT_EQ(rows[0].ancilla_paper, 4);
  EXPECT_LE(rows[0].oracle_gates_paper, 67u);
  const auto csv = cost_csv(rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,k,data_qubits,baseline_data_qubits,ancilla_paper,ancilla_strict,baseline_ancilla_order,"
            "oracle_gates_paper,oracle_gates_strict,lowered_gates_strict");
}

TEST(Pipeline, RunTriangle) {
  const auto instance = make_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 3);
  const auto out = run_pipeline(instance, {});
  const auto& r = out.report;
  EXPECT_EQ(r["M"], 6);
  EXPECT_EQ(r["N"], 64);
  EXPECT_EQ(r["t"], 2);
  EXPECT_GE(r["success_probability"].get<double>(), 0.99);
  EXPECT_TRUE(r["solutions_match"].get<bool>());
  EXPECT_EQ(r["top_states"].size(), 10u);
  ASSERT_TRUE(out.qasm.has_value());
  EXPECT_NO_THROW(qasm_check::parse(*out.qasm));
  EXPECT_FALSE(out.histogram.empty());
}

TEST(Pipeline, UncolorableReportsZeroSolutions) {
  const auto out = run_pipeline(make_instance(Graph(3, {{0, 1}, {0, 2}, {1, 2}}), 2), {});
  EXPECT_EQ(out.report["M"], 0);
  EXPECT_EQ(out.report["message"], "graph is not 2-colorable");
  EXPECT_FALSE(out.qasm.has_value());
}

TEST(Pipeline, RoutedRunMatches) {
  RunConfig config;
  config.topology = CouplingGraph::line(6);
  const auto out = run_pipeline(make_instance(Graph(3, {{0, 1}, {1, 2}}), 2), config);
  EXPECT_TRUE(out.report["routing"]["constraints_ok"].get<bool>());
  EXPECT_TRUE(out.report["solutions_match"].get<bool>());
  ASSERT_TRUE(out.qasm.has_value());
  const auto program = qasm_check::parse(*out.qasm);
  EXPECT_EQ(program.num_qubits, 6);
  EXPECT_EQ(program.comments.size(), 6u);
}

TEST(Pipeline, TopStatesAreSortedWithStableTies) {
  const std::map<std::string, double> dist = {{"00", 0.1}, {"01", 0.4}, {"10", 0.4}, {"11", 0.1}};
  const auto top = top_states(dist, 3);
  ASSERT_EQ(top.size(), 3u);
  EXPECT_EQ(top[0].first, "01");
  EXPECT_EQ(top[1].first, "10");
  EXPECT_EQ(top[2].first, "00");
}

}  // namespace
}  // namespace gkc
