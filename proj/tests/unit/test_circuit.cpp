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

#include <random>

#include "gkc/circuit.hpp"
#include "gkc/error.hpp"
#include "reference.hpp"

namespace gkc {
namespace {

TEST(Circuit, ValidatesOperands) {
  Circuit c(3);
  EXPECT_THROW(c.append(Gate::x(3)), Error);
  EXPECT_THROW(c.append(Gate::cx(1, 1)), Error);
  EXPECT_THROW(c.append(Gate::mct({{0}, {0, Polarity::Negative}}, 2)), Error);
  EXPECT_THROW(c.append(Gate::mct(positive({0, 1}), 1)), Error);
  EXPECT_THROW(c.append(Gate::swap(2, 2)), Error);
  EXPECT_NO_THROW(c.append(Gate::mct({{0, Polarity::Negative}, {1}}, 2)));
  EXPECT_EQ(c.size(), 1u);
}

TEST(Circuit, AppendRejectsWidthMismatch) {
  Circuit a(2), b(3);
  EXPECT_THROW(a.append(b), Error);
}

TEST(Circuit, AdjointOfEachKind) {
  EXPECT_EQ(adjoint(Gate::s(0)), Gate::sdg(0));
  EXPECT_EQ(adjoint(Gate::tdg(1)), Gate::t(1));
  EXPECT_EQ(adjoint(Gate::rx(0, 0.3)), Gate::rx(0, -0.3));
  EXPECT_EQ(adjoint(Gate::crx(0, 1, 0.3)), Gate::crx(0, 1, -0.3));
  EXPECT_EQ(adjoint(Gate::h(2)), Gate::h(2));
  EXPECT_EQ(adjoint(Gate::mct(positive({0, 1}), 2)), Gate::mct(positive({0, 1}), 2));
}

TEST(Circuit, InverseReversesAndKeepsMetadata) {
  QubitLayout layout;
  Circuit c({QubitRole::Data, QubitRole::Output}, {InitialState::Zero, InitialState::One});
  c.append(Gate::h(0)).append(Gate::t(0)).append(Gate::cx(0, 1));
  const auto inv = inverse(c);
  ASSERT_EQ(inv.size(), 3u);
  EXPECT_EQ(inv[0], Gate::cx(0, 1));
  EXPECT_EQ(inv[1], Gate::tdg(0));
  EXPECT_EQ(inv[2], Gate::h(0));
  EXPECT_EQ(inv.roles(), c.roles());
  EXPECT_EQ(inv.initial_state(), c.initial_state());
  EXPECT_EQ(inverse(inv), c);
}

TEST(Circuit, MeasuredQubitsDefaultToData) {
  Circuit plain(3);
  EXPECT_EQ(plain.measured_qubits(), (std::vector<int>{0, 1, 2}));
  Circuit roles({QubitRole::Data, QubitRole::EdgeAncilla, QubitRole::Data, QubitRole::Output},
                std::vector<InitialState>(4, InitialState::Zero));
  EXPECT_EQ(roles.measured_qubits(), (std::vector<int>{0, 2}));
  roles.set_measured_qubits({3});
  EXPECT_EQ(roles.measured_qubits(), std::vector<int>{3});
}

TEST(Circuit, StatsCountDepthAndArity) {
  Circuit c(4);
  c.append(Gate::h(0)).append(Gate::h(1)).append(Gate::cx(0, 1)).append(Gate::mct(positive({0, 1, 2}), 3));
  c.append(Gate::x(2));
  const auto s = stats(c);
  EXPECT_EQ(s.gate_count, 5u);
  EXPECT_EQ(s.two_qubit_count, 1u);
  EXPECT_EQ(s.depth, 4u);
  EXPECT_EQ(s.mct_count_by_arity, (std::map<int, std::size_t>{{3, 1}}));
  EXPECT_EQ(stats(Circuit(2)).depth, 0u);
}

TEST(Circuit, DescribeIsReadable) {
  EXPECT_EQ(describe(Gate::mct({{0, Polarity::Negative}, {1}}, 3)), "mct ctrl=[!0,1] tgt=[3]");
  EXPECT_EQ(describe(Gate::cx(0, 2)), "cx ctrl=[0] tgt=[2]");
}

TEST(Circuit, LayoutRolesAndInitialStates) {
  QubitLayout l;
  l.num_vertices = 2;
  l.bits_per_vertex = 2;
  l.data = {0, 4};
  l.edge_ancilla = {4, 1};
  l.invalid_ancilla = {5, 1};
  l.output = 6;
  EXPECT_EQ(l.num_qubits(), 7);
  EXPECT_EQ(l.ancilla_count(), 2);
  EXPECT_EQ(l.vertex_qubits(1), (std::vector<int>{2, 3}));
  const auto roles = l.roles();
  EXPECT_EQ(roles[4], QubitRole::EdgeAncilla);
  EXPECT_EQ(roles[5], QubitRole::InvalidAncilla);
  EXPECT_EQ(roles[6], QubitRole::Output);
  const auto init = l.initial_states();
  EXPECT_EQ(init[0], InitialState::Zero);
  EXPECT_EQ(init[4], InitialState::One);
  EXPECT_EQ(init[5], InitialState::Zero);
  EXPECT_EQ(init[6], InitialState::One);
}

// Property: C followed by inverse(C) is the identity, checked with the
// reference matrix builder.
TEST(CircuitProperty, InverseComposesToIdentity) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = reference::random_circuit(4, 20, rng, true);
    const auto u = reference::circuit_matrix(compose(c, inverse(c)));
    const auto id = Eigen::MatrixXcd::Identity(16, 16);
    ASSERT_LT((u - id).cwiseAbs().maxCoeff(), 1e-9) << "trial " << trial;
  }
}

}  // namespace
}  // namespace gkc
