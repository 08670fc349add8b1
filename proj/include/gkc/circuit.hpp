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
#include <string>
#include <string_view>
#include <vector>

namespace gkc {

enum class GateKind : std::uint8_t {
  X, H, Z, S, T, Sdg, Tdg, Rx, Ry, Rz,
  CX, CZ, CRx, Swap,
  MCT, MCZ,
};

std::string_view gate_name(GateKind kind);
bool is_rotation(GateKind kind);
bool is_single_qubit(GateKind kind);

enum class Polarity : std::uint8_t { Negative, Positive };

struct Control {
  int qubit = 0;
  Polarity polarity = Polarity::Positive;

  friend bool operator==(const Control&, const Control&) = default;
};

/// One circuit instruction. Use the named constructors; they produce gates
/// that satisfy the per-kind operand shape. Register bounds and operand
/// overlap are checked when the gate is appended to a Circuit.
struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Control> controls;
  std::vector<int> targets;
  double angle = 0.0;

  static Gate x(int q) { return {GateKind::X, {}, {q}}; }
  static Gate h(int q) { return {GateKind::H, {}, {q}}; }
  static Gate z(int q) { return {GateKind::Z, {}, {q}}; }
  static Gate s(int q) { return {GateKind::S, {}, {q}}; }
  static Gate t(int q) { return {GateKind::T, {}, {q}}; }
  static Gate sdg(int q) { return {GateKind::Sdg, {}, {q}}; }
  static Gate tdg(int q) { return {GateKind::Tdg, {}, {q}}; }
  static Gate rx(int q, double theta) { return {GateKind::Rx, {}, {q}, theta}; }
  static Gate ry(int q, double theta) { return {GateKind::Ry, {}, {q}, theta}; }
  static Gate rz(int q, double theta) { return {GateKind::Rz, {}, {q}, theta}; }
  static Gate cx(int control, int target) { return {GateKind::CX, {{control}}, {target}}; }
  static Gate cz(int control, int target) { return {GateKind::CZ, {{control}}, {target}}; }
  static Gate crx(int control, int target, double theta) {
    return {GateKind::CRx, {{control}}, {target}, theta};
  }
  static Gate swap(int a, int b) { return {GateKind::Swap, {}, {a, b}}; }
  static Gate mct(std::vector<Control> controls, int target) {
    return {GateKind::MCT, std::move(controls), {target}};
  }
  static Gate mcz(std::vector<Control> controls, int target) {
    return {GateKind::MCZ, std::move(controls), {target}};
  }

  /// Controls then targets.
  std::vector<int> operands() const;
  int arity() const { return static_cast<int>(controls.size() + targets.size()); }
  bool has_negative_control() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Shorthand for a list of positive controls.
std::vector<Control> positive(const std::vector<int>& qubits);

/// Throws InvalidGate, IndexOutOfRange or OverlappingOperands.
void validate(const Gate& gate, int num_qubits);

/// Adjoint of a single gate.
Gate adjoint(const Gate& gate);

enum class QubitRole : std::uint8_t { Data, EdgeAncilla, InvalidAncilla, ValidFlag, Output, Unused };
enum class InitialState : std::uint8_t { Zero, One };

std::string_view role_name(QubitRole role);

/// Half-open run of consecutive qubit indices.
struct QubitRange {
  int begin = 0;
  int count = 0;

  int end() const { return begin + count; }
  bool empty() const { return count == 0; }
  int operator[](int i) const { return begin + i; }
  friend bool operator==(const QubitRange&, const QubitRange&) = default;
};

/// Placement of the oracle registers. Ranges are contiguous and laid out in
/// the order data, edge ancillas, invalid ancilla, valid flags, output.
struct QubitLayout {
  int num_vertices = 0;
  int bits_per_vertex = 0;
  QubitRange data;
  QubitRange edge_ancilla;
  QubitRange invalid_ancilla;  ///< zero or one qubit
  QubitRange valid_flags;      ///< zero or num_vertices qubits
  int output = 0;

  int num_qubits() const { return output + 1; }
  int ancilla_count() const { return edge_ancilla.count + invalid_ancilla.count + valid_flags.count; }
  /// Qubit holding bit `bit` (0 = most significant) of vertex v's color.
  int color_qubit(int vertex, int bit) const { return data.begin + vertex * bits_per_vertex + bit; }
  std::vector<int> vertex_qubits(int vertex) const;

  std::vector<QubitRole> roles() const;
  std::vector<InitialState> initial_states() const;

  friend bool operator==(const QubitLayout&, const QubitLayout&) = default;
};

/// Ordered gate list over a fixed register with per-qubit role tags.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);
  Circuit(std::vector<QubitRole> roles, std::vector<InitialState> initial);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }
  const Gate& operator[](std::size_t i) const { return gates_[i]; }

  const std::vector<QubitRole>& roles() const noexcept { return roles_; }
  const std::vector<InitialState>& initial_state() const noexcept { return initial_; }
  void set_initial_state(std::vector<InitialState> initial);
  void set_roles(std::vector<QubitRole> roles);

  /// Qubits measured into the classical register, in bit order. Defaults to
  /// the Data-role qubits, or every qubit when no qubit has that role.
  std::vector<int> measured_qubits() const;
  void set_measured_qubits(std::vector<int> qubits);

  /// Same register and metadata, no gates.
  Circuit empty_like() const;

  /// Validates against the register, then appends.
  Circuit& append(Gate gate);
  /// Appends every gate of `other`; registers must have equal width.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;
  friend Circuit inverse(const Circuit& circuit);

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
  std::vector<QubitRole> roles_;
  std::vector<InitialState> initial_;
  std::vector<int> measured_;
};

/// Reversed gate order with each gate replaced by its adjoint.
Circuit inverse(const Circuit& circuit);

/// `first` followed by `second`; metadata taken from `first`.
Circuit compose(const Circuit& first, const Circuit& second);

struct CircuitStats {
  std::size_t gate_count = 0;
  std::size_t two_qubit_count = 0;
  /// MCT/MCZ gates keyed by number of controls.
  std::map<int, std::size_t> mct_count_by_arity;
  std::size_t depth = 0;

  friend bool operator==(const CircuitStats&, const CircuitStats&) = default;
};

CircuitStats stats(const Circuit& circuit);

/// Multi-line human readable listing, one gate per line.
std::string describe(const Circuit& circuit);
std::string describe(const Gate& gate);

}  // namespace gkc
