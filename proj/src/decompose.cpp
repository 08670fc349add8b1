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

#include "gkc/decompose.hpp"

#include <bit>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gkc/error.hpp"

namespace gkc {

namespace {

using std::numbers::pi;

// C^q X on positive controls, q >= 2.
void gray_code_mct(const std::vector<int>& controls, int target, std::vector<Gate>& out) {
  const int q = static_cast<int>(controls.size());
  const double theta = pi / static_cast<double>(std::uint64_t{1} << (q - 1));
  const double alpha = theta / 2;
  // holds[j]: set of original controls whose parity qubit controls[j] holds.
  std::vector<std::uint32_t> holds(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) holds[j] = std::uint32_t{1} << j;

  for (std::uint32_t i = 1; i < (std::uint32_t{1} << q); ++i) {
    const std::uint32_t subset = i ^ (i >> 1);
    const int lead = std::bit_width(subset) - 1;
    std::uint32_t diff = subset ^ holds[lead];
    while (diff) {
      const int j = std::countr_zero(diff);
      out.push_back(Gate::cx(controls[j], controls[lead]));
      holds[lead] ^= std::uint32_t{1} << j;
      diff &= diff - 1;
    }
    const double sign = std::popcount(subset) % 2 == 1 ? 1.0 : -1.0;
    out.push_back(Gate::crx(controls[lead], target, sign * theta));
    out.push_back(Gate::rz(controls[lead], sign * alpha));
  }
}

}  // namespace

std::string_view basis_name(Basis basis) { return basis == Basis::Native ? "native" : "cx,u3"; }

Basis parse_basis(std::string_view text) {
  if (text == "native" || text == "table2") return Basis::Native;
  if (text == "cx,u3" || text == "u3,cx") return Basis::CxU3;
  throw std::invalid_argument("unknown basis '" + std::string(text) + "'");
}

bool is_elementary(const Gate& gate, Basis basis) {
  if (is_single_qubit(gate.kind)) return true;
  switch (gate.kind) {
    case GateKind::CX: return true;
    case GateKind::CZ: case GateKind::CRx: case GateKind::Swap: return basis == Basis::Native;
    default: return false;
  }
}

std::vector<Gate> decompose_mct(const Gate& gate) {
  if (gate.kind != GateKind::MCT && gate.kind != GateKind::MCZ) {
    throw Error(ErrorCode::InvalidGate, "decompose_mct expects an MCT or MCZ, got " + describe(gate));
  }
  const bool phase = gate.kind == GateKind::MCZ;
  const int target = gate.targets.at(0);
  std::vector<int> controls;
  std::vector<int> flipped;
  for (const auto& c : gate.controls) {
    controls.push_back(c.qubit);
    if (c.polarity == Polarity::Negative) flipped.push_back(c.qubit);
  }

  std::vector<Gate> out;
  for (int q : flipped) out.push_back(Gate::x(q));
  if (controls.empty()) {
    out.push_back(phase ? Gate::z(target) : Gate::x(target));
  } else if (controls.size() == 1) {
    out.push_back(phase ? Gate::cz(controls[0], target) : Gate::cx(controls[0], target));
  } else {
    if (phase) out.push_back(Gate::h(target));
    gray_code_mct(controls, target, out);
    if (phase) out.push_back(Gate::h(target));
  }
  for (int q : flipped) out.push_back(Gate::x(q));
  return out;
}

std::vector<Gate> rewrite_for_basis(const Gate& gate, Basis basis) {
  if (gate.kind == GateKind::MCT || gate.kind == GateKind::MCZ) {
    throw Error(ErrorCode::UnloweredGate, describe(gate));
  }
  if (basis == Basis::Native || is_elementary(gate, basis)) return {gate};
  switch (gate.kind) {
    case GateKind::CZ: {
      const int c = gate.controls[0].qubit;
      const int t = gate.targets[0];
      return {Gate::h(t), Gate::cx(c, t), Gate::h(t)};
    }
    case GateKind::CRx: {
      const int c = gate.controls[0].qubit;
      const int t = gate.targets[0];
      return {Gate::h(t), Gate::rz(t, gate.angle / 2), Gate::cx(c, t),
              Gate::rz(t, -gate.angle / 2), Gate::cx(c, t), Gate::h(t)};
    }
    case GateKind::Swap: {
      const int a = gate.targets[0];
      const int b = gate.targets[1];
      return {Gate::cx(a, b), Gate::cx(b, a), Gate::cx(a, b)};
    }
    default:
      throw Error(ErrorCode::UnloweredGate, describe(gate));
  }
}

std::size_t lowered_gate_count(const Gate& gate, Basis basis) {
  auto rewritten = [basis](const Gate& g) { return rewrite_for_basis(g, basis).size(); };
  if (gate.kind != GateKind::MCT && gate.kind != GateKind::MCZ) return rewritten(gate);
  const bool phase = gate.kind == GateKind::MCZ;
  const std::size_t q = gate.controls.size();
  std::size_t negatives = 0;
  for (const auto& c : gate.controls) negatives += c.polarity == Polarity::Negative ? 1 : 0;
  std::size_t count = 2 * negatives;
  if (q == 0) return count + 1;
  if (q == 1) return count + rewritten(phase ? Gate::cz(0, 1) : Gate::cx(0, 1));
  // 2^q - 1 subsets, each one CRx and one Rz; 2^q - 2 parity CX gates.
  const std::size_t subsets = (std::size_t{1} << q) - 1;
  count += subsets * (rewritten(Gate::crx(0, 1, 1.0)) + 1) + (subsets - 1);
  if (phase) count += 2;
  return count;
}

std::size_t lowered_gate_count(const Circuit& circuit, Basis basis) {
  std::size_t total = 0;
  for (const auto& g : circuit.gates()) total += lowered_gate_count(g, basis);
  return total;
}

Circuit lower_circuit(const Circuit& circuit, Basis basis) {
  Circuit out = circuit.empty_like();
  for (const auto& gate : circuit.gates()) {
    if (gate.kind == GateKind::MCT || gate.kind == GateKind::MCZ) {
      for (const auto& piece : decompose_mct(gate)) {
        for (auto& g : rewrite_for_basis(piece, basis)) out.append(std::move(g));
      }
    } else {
      for (auto& g : rewrite_for_basis(gate, basis)) out.append(std::move(g));
    }
  }
  return out;
}

}  // namespace gkc
