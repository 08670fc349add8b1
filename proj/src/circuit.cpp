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

#include "gkc/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::Z: return "z";
    case GateKind::S: return "s";
    case GateKind::T: return "t";
    case GateKind::Sdg: return "sdg";
    case GateKind::Tdg: return "tdg";
    case GateKind::Rx: return "rx";
    case GateKind::Ry: return "ry";
    case GateKind::Rz: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CRx: return "crx";
    case GateKind::Swap: return "swap";
    case GateKind::MCT: return "mct";
    case GateKind::MCZ: return "mcz";
  }
  return "?";
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::Rx || kind == GateKind::Ry || kind == GateKind::Rz || kind == GateKind::CRx;
}

bool is_single_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::X: case GateKind::H: case GateKind::Z: case GateKind::S: case GateKind::T:
    case GateKind::Sdg: case GateKind::Tdg: case GateKind::Rx: case GateKind::Ry: case GateKind::Rz:
      return true;
    default:
      return false;
  }
}

std::vector<int> Gate::operands() const {
  std::vector<int> out;
  out.reserve(controls.size() + targets.size());
  for (const auto& c : controls) out.push_back(c.qubit);
  out.insert(out.end(), targets.begin(), targets.end());
  return out;
}

bool Gate::has_negative_control() const {
  return std::any_of(controls.begin(), controls.end(),
                     [](const Control& c) { return c.polarity == Polarity::Negative; });
}

std::vector<Control> positive(const std::vector<int>& qubits) {
  std::vector<Control> out;
  out.reserve(qubits.size());
  for (int q : qubits) out.push_back({q, Polarity::Positive});
  return out;
}

void validate(const Gate& gate, int num_qubits) {
  const auto name = std::string(gate_name(gate.kind));
  auto shape = [&](std::size_t controls, std::size_t targets) {
    if (gate.controls.size() != controls || gate.targets.size() != targets) {
      throw Error(ErrorCode::InvalidGate, name + " expects " + std::to_string(controls) +
                                              " control(s) and " + std::to_string(targets) + " target(s)");
    }
  };
  switch (gate.kind) {
    case GateKind::CX: case GateKind::CZ: case GateKind::CRx: shape(1, 1); break;
    case GateKind::Swap: shape(0, 2); break;
    case GateKind::MCT: case GateKind::MCZ:
      if (gate.targets.size() != 1) throw Error(ErrorCode::InvalidGate, name + " expects exactly one target");
      break;
    default: shape(0, 1); break;
  }
  if (gate.kind != GateKind::MCT && gate.kind != GateKind::MCZ && gate.has_negative_control()) {
    throw Error(ErrorCode::InvalidGate, "negative control on " + name);
  }
  auto operands = gate.operands();
  for (int q : operands) {
    if (q < 0 || q >= num_qubits) {
      throw Error(ErrorCode::IndexOutOfRange,
                  name + " on qubit " + std::to_string(q) + " of a " + std::to_string(num_qubits) + "-qubit register");
    }
  }
  std::sort(operands.begin(), operands.end());
  if (std::adjacent_find(operands.begin(), operands.end()) != operands.end()) {
    throw Error(ErrorCode::OverlappingOperands, describe(gate));
  }
}

Gate adjoint(const Gate& gate) {
  Gate out = gate;
  switch (gate.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::Rx: case GateKind::Ry: case GateKind::Rz: case GateKind::CRx:
      out.angle = -gate.angle;
      break;
    default: break;
  }
  return out;
}

std::string_view role_name(QubitRole role) {
  switch (role) {
    case QubitRole::Data: return "data";
    case QubitRole::EdgeAncilla: return "edge_ancilla";
    case QubitRole::InvalidAncilla: return "invalid_ancilla";
    case QubitRole::ValidFlag: return "valid_flag";
    case QubitRole::Output: return "output";
    case QubitRole::Unused: return "unused";
  }
  return "?";
}

std::vector<int> QubitLayout::vertex_qubits(int vertex) const {
  std::vector<int> out;
  for (int b = 0; b < bits_per_vertex; ++b) out.push_back(color_qubit(vertex, b));
  return out;
}

std::vector<QubitRole> QubitLayout::roles() const {
  std::vector<QubitRole> out(num_qubits(), QubitRole::Data);
  for (int q = edge_ancilla.begin; q < edge_ancilla.end(); ++q) out[q] = QubitRole::EdgeAncilla;
  for (int q = invalid_ancilla.begin; q < invalid_ancilla.end(); ++q) out[q] = QubitRole::InvalidAncilla;
  for (int q = valid_flags.begin; q < valid_flags.end(); ++q) out[q] = QubitRole::ValidFlag;
  out[output] = QubitRole::Output;
  return out;
}

std::vector<InitialState> QubitLayout::initial_states() const {
  std::vector<InitialState> out(num_qubits(), InitialState::Zero);
  for (int q = edge_ancilla.begin; q < edge_ancilla.end(); ++q) out[q] = InitialState::One;
  for (int q = valid_flags.begin; q < valid_flags.end(); ++q) out[q] = InitialState::One;
  out[output] = InitialState::One;
  return out;
}

Circuit::Circuit(int num_qubits)
    : num_qubits_(num_qubits),
      roles_(static_cast<std::size_t>(num_qubits), QubitRole::Unused),
      initial_(static_cast<std::size_t>(num_qubits), InitialState::Zero) {
  if (num_qubits < 0) throw Error(ErrorCode::IndexOutOfRange, "negative register width");
}

Circuit::Circuit(std::vector<QubitRole> roles, std::vector<InitialState> initial)
    : num_qubits_(static_cast<int>(roles.size())), roles_(std::move(roles)), initial_(std::move(initial)) {
  if (initial_.size() != roles_.size()) {
    throw Error(ErrorCode::WidthMismatch, "roles and initial states differ in length");
  }
}

void Circuit::set_initial_state(std::vector<InitialState> initial) {
  if (static_cast<int>(initial.size()) != num_qubits_) throw Error(ErrorCode::WidthMismatch, "initial state width");
  initial_ = std::move(initial);
}

void Circuit::set_roles(std::vector<QubitRole> roles) {
  if (static_cast<int>(roles.size()) != num_qubits_) throw Error(ErrorCode::WidthMismatch, "role list width");
  roles_ = std::move(roles);
}

std::vector<int> Circuit::measured_qubits() const {
  if (!measured_.empty()) return measured_;
  std::vector<int> out;
  for (int q = 0; q < num_qubits_; ++q) {
    if (roles_[q] == QubitRole::Data) out.push_back(q);
  }
  if (out.empty()) {
    for (int q = 0; q < num_qubits_; ++q) out.push_back(q);
  }
  return out;
}

void Circuit::set_measured_qubits(std::vector<int> qubits) {
  for (int q : qubits) {
    if (q < 0 || q >= num_qubits_) throw Error(ErrorCode::IndexOutOfRange, "measured qubit " + std::to_string(q));
  }
  measured_ = std::move(qubits);
}

Circuit Circuit::empty_like() const {
  Circuit out = *this;
  out.gates_.clear();
  return out;
}

Circuit& Circuit::append(Gate gate) {
  validate(gate, num_qubits_);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits_ != num_qubits_) {
    throw Error(ErrorCode::WidthMismatch, "appending a " + std::to_string(other.num_qubits_) +
                                              "-qubit circuit to a " + std::to_string(num_qubits_) + "-qubit one");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  return *this;
}

Circuit inverse(const Circuit& circuit) {
  Circuit out = circuit;
  std::reverse(out.gates_.begin(), out.gates_.end());
  for (auto& g : out.gates_) g = adjoint(g);
  return out;
}

Circuit compose(const Circuit& first, const Circuit& second) {
  Circuit out = first;
  out.append(second);
  return out;
}

CircuitStats stats(const Circuit& circuit) {
  CircuitStats s;
  std::vector<std::size_t> level(static_cast<std::size_t>(circuit.num_qubits()), 0);
  for (const auto& g : circuit.gates()) {
    ++s.gate_count;
    if (g.arity() == 2) ++s.two_qubit_count;
    if (g.kind == GateKind::MCT || g.kind == GateKind::MCZ) ++s.mct_count_by_arity[static_cast<int>(g.controls.size())];
    const auto ops = g.operands();
    std::size_t top = 0;
    for (int q : ops) top = std::max(top, level[q]);
    for (int q : ops) level[q] = top + 1;
    s.depth = std::max(s.depth, top + 1);
  }
  return s;
}

std::string describe(const Gate& gate) {
  std::ostringstream out;
  out << gate_name(gate.kind);
  if (is_rotation(gate.kind)) out << '(' << gate.angle << ')';
  if (!gate.controls.empty()) {
    out << " ctrl=[";
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
      if (i) out << ',';
      if (gate.controls[i].polarity == Polarity::Negative) out << '!';
      out << gate.controls[i].qubit;
    }
    out << ']';
  }
  out << " tgt=[";
  for (std::size_t i = 0; i < gate.targets.size(); ++i) out << (i ? "," : "") << gate.targets[i];
  out << ']';
  return out.str();
}

std::string describe(const Circuit& circuit) {
  std::ostringstream out;
  out << "# " << circuit.num_qubits() << " qubits, " << circuit.size() << " gates\n";
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    out << "# q" << q << ' ' << role_name(circuit.roles()[q])
        << (circuit.initial_state()[q] == InitialState::One ? " |1>" : " |0>") << '\n';
  }
  for (const auto& g : circuit.gates()) out << describe(g) << '\n';
  return out.str();
}

}  // namespace gkc
