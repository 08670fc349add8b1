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

#include "gkc/qasm.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

namespace {

using std::numbers::pi;

std::string qubit(int q) { return "q[" + std::to_string(q) + "]"; }

std::string u3(double theta, double phi, double lambda) {
  return "u3(" + format_angle(theta) + "," + format_angle(phi) + "," + format_angle(lambda) + ")";
}

std::string single_qubit_u3(const Gate& g) {
  switch (g.kind) {
    case GateKind::X: return u3(pi, 0, pi);
    case GateKind::H: return u3(pi / 2, 0, pi);
    case GateKind::Z: return u3(0, 0, pi);
    case GateKind::S: return u3(0, 0, pi / 2);
    case GateKind::Sdg: return u3(0, 0, -pi / 2);
    case GateKind::T: return u3(0, 0, pi / 4);
    case GateKind::Tdg: return u3(0, 0, -pi / 4);
    case GateKind::Rx: return u3(g.angle, -pi / 2, pi / 2);
    case GateKind::Ry: return u3(g.angle, 0, 0);
    case GateKind::Rz: return u3(0, 0, g.angle);
    default: break;
  }
  throw Error(ErrorCode::UnloweredGate, describe(g));
}

std::string statement(const Gate& g, Basis basis) {
  std::string head;
  if (basis == Basis::CxU3 && is_single_qubit(g.kind)) {
    head = single_qubit_u3(g);
  } else {
    head = std::string(gate_name(g.kind));
    if (is_rotation(g.kind)) head += "(" + format_angle(g.angle) + ")";
  }
  std::string args;
  for (const auto& c : g.controls) args += (args.empty() ? "" : ",") + qubit(c.qubit);
  for (int t : g.targets) args += (args.empty() ? "" : ",") + qubit(t);
  return head + " " + args + ";";
}

// Narrow MCT/MCZ spellings that need no decomposition.
Gate normalize(const Gate& g) {
  if (g.kind != GateKind::MCT && g.kind != GateKind::MCZ) return g;
  if (g.controls.size() >= 2 || g.has_negative_control()) throw Error(ErrorCode::UnloweredGate, describe(g));
  const bool phase = g.kind == GateKind::MCZ;
  if (g.controls.empty()) return phase ? Gate::z(g.targets[0]) : Gate::x(g.targets[0]);
  return phase ? Gate::cz(g.controls[0].qubit, g.targets[0]) : Gate::cx(g.controls[0].qubit, g.targets[0]);
}

}  // namespace

std::string format_angle(double radians) {
  if (radians == 0.0) return "0";
  const double ratio = radians / pi;
  for (long long denom = 1; denom <= (1LL << 20); denom *= 2) {
    const double numer = ratio * static_cast<double>(denom);
    const double rounded = std::round(numer);
    if (std::abs(numer - rounded) < 1e-12 * static_cast<double>(denom) && std::abs(rounded) < 1e6) {
      const auto n = static_cast<long long>(rounded);
      std::string out = n < 0 ? "-" : "";
      const long long mag = n < 0 ? -n : n;
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "pi";
      if (denom != 1) out += "/" + std::to_string(denom);
      return out;
    }
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", radians);
  return buf;
}

std::string emit_qasm(const Circuit& circuit, const QasmOptions& options) {
  std::vector<std::string> body;
  for (const auto& raw : circuit.gates()) {
    for (const auto& g : rewrite_for_basis(normalize(raw), options.basis)) body.push_back(statement(g, options.basis));
  }

  const auto measured = circuit.measured_qubits();
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits() << "];\n";
  out << "creg c[" << measured.size() << "];\n";
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    if (circuit.initial_state()[q] == InitialState::One) {
      out << statement(Gate::x(q), options.basis) << '\n';
    }
  }
  for (const auto& line : body) out << line << '\n';
  for (std::size_t j = 0; j < measured.size(); ++j) {
    out << "measure " << qubit(measured[j]) << " -> c[" << j << "];\n";
  }
  for (const auto& comment : options.trailing_comments) out << "// " << comment << '\n';
  return out.str();
}

}  // namespace gkc
