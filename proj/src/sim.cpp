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

#include "gkc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "gkc/error.hpp"

namespace gkc::sim {

namespace {

constexpr Amplitude kI{0.0, 1.0};
constexpr double kLeakTolerance = 1e-9;

void check_width(int num_qubits) {
  if (num_qubits < 0) throw Error(ErrorCode::IndexOutOfRange, "negative qubit count");
  if (num_qubits > qubit_ceiling()) {
    throw Error(ErrorCode::TooManyQubits, std::to_string(num_qubits) + " qubits exceeds the ceiling of " +
                                              std::to_string(qubit_ceiling()));
  }
}

// Spreads the bits of `k` over the positions not listed in `fixed`
// (ascending), leaving zeros at the fixed positions.
std::uint64_t deposit(std::uint64_t k, std::span<const int> fixed) {
  for (int p : fixed) {
    const std::uint64_t low = k & ((std::uint64_t{1} << p) - 1);
    k = ((k >> p) << (p + 1)) | low;
  }
  return k;
}

struct ControlMask {
  std::uint64_t mask = 0;
  std::uint64_t value = 0;
};

ControlMask control_mask(const Gate& gate) {
  ControlMask m;
  for (const auto& c : gate.controls) {
    m.mask |= std::uint64_t{1} << c.qubit;
    if (c.polarity == Polarity::Positive) m.value |= std::uint64_t{1} << c.qubit;
  }
  return m;
}

std::vector<int> fixed_positions(std::uint64_t mask) {
  std::vector<int> out;
  for (int p = 0; mask; ++p, mask >>= 1) {
    if (mask & 1) out.push_back(p);
  }
  return out;
}

}  // namespace

int qubit_ceiling() {
  if (const char* env = std::getenv("GKC_QUBIT_CEILING")) {
    char* end = nullptr;
    long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0 && value <= 40) return static_cast<int>(value);
  }
  return 24;
}

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

Statevector Statevector::basis(int num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.dimension()) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(index));
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const auto n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("amplitude count is not a power of two");
  int q = 0;
  while ((std::size_t{1} << q) < n) ++q;
  Statevector s(q);
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm_squared() - 1.0) > 1e-9) throw std::invalid_argument("state is not normalized");
  return s;
}

double Statevector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amps_) total += std::norm(a);
  return total;
}

void Statevector::apply_matrix(const std::array<Amplitude, 4>& m, std::uint64_t ctrl_mask,
                               std::uint64_t ctrl_value, int target) {
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const auto fixed = fixed_positions(ctrl_mask | tbit);
  const std::uint64_t count = amps_.size() >> fixed.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t i0 = deposit(k, fixed) | ctrl_value;
    const std::uint64_t i1 = i0 | tbit;
    const Amplitude a = amps_[i0];
    const Amplitude b = amps_[i1];
    amps_[i0] = m[0] * a + m[1] * b;
    amps_[i1] = m[2] * a + m[3] * b;
  }
}

void Statevector::apply_flip(std::uint64_t ctrl_mask, std::uint64_t ctrl_value, int target) {
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const auto fixed = fixed_positions(ctrl_mask | tbit);
  const std::uint64_t count = amps_.size() >> fixed.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t i0 = deposit(k, fixed) | ctrl_value;
    std::swap(amps_[i0], amps_[i0 | tbit]);
  }
}

void Statevector::apply_phase(std::uint64_t ctrl_mask, std::uint64_t ctrl_value, int target, Amplitude phase) {
  const std::uint64_t tbit = std::uint64_t{1} << target;
  const auto fixed = fixed_positions(ctrl_mask | tbit);
  const std::uint64_t count = amps_.size() >> fixed.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    amps_[deposit(k, fixed) | ctrl_value | tbit] *= phase;
  }
}

void Statevector::apply_swap(int a, int b) {
  const std::uint64_t abit = std::uint64_t{1} << a;
  const std::uint64_t bbit = std::uint64_t{1} << b;
  const auto fixed = fixed_positions(abit | bbit);
  const std::uint64_t count = amps_.size() >> fixed.size();
  for (std::uint64_t k = 0; k < count; ++k) {
    const std::uint64_t base = deposit(k, fixed);
    std::swap(amps_[base | abit], amps_[base | bbit]);
  }
}

void Statevector::apply(const Gate& gate) {
  validate(gate, num_qubits_);
  const auto [mask, value] = control_mask(gate);
  switch (gate.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCT:
      apply_flip(mask, value, gate.targets[0]);
      break;
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::MCZ:
      apply_phase(mask, value, gate.targets[0], -1.0);
      break;
    case GateKind::S: apply_phase(mask, value, gate.targets[0], kI); break;
    case GateKind::Sdg: apply_phase(mask, value, gate.targets[0], -kI); break;
    case GateKind::T: apply_phase(mask, value, gate.targets[0], std::polar(1.0, std::numbers::pi / 4)); break;
    case GateKind::Tdg: apply_phase(mask, value, gate.targets[0], std::polar(1.0, -std::numbers::pi / 4)); break;
    case GateKind::Swap:
      apply_swap(gate.targets[0], gate.targets[1]);
      break;
    default:
      apply_matrix(target_matrix(gate), mask, value, gate.targets[0]);
      break;
  }
}

void Statevector::apply(const Circuit& circuit) {
  if (circuit.num_qubits() != num_qubits_) {
    throw Error(ErrorCode::WidthMismatch, "circuit width " + std::to_string(circuit.num_qubits()) +
                                              " vs state width " + std::to_string(num_qubits_));
  }
  for (const auto& g : circuit.gates()) apply(g);
}

std::array<Amplitude, 4> target_matrix(const Gate& gate) {
  const double half = gate.angle / 2;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const double r = std::numbers::sqrt2 / 2;
  switch (gate.kind) {
    case GateKind::X: case GateKind::CX: case GateKind::MCT: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::Z: case GateKind::CZ: case GateKind::MCZ: return {1.0, 0.0, 0.0, -1.0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::Sdg: return {1.0, 0.0, 0.0, -kI};
    case GateKind::T: return {1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4)};
    case GateKind::Tdg: return {1.0, 0.0, 0.0, std::polar(1.0, -std::numbers::pi / 4)};
    case GateKind::Rx: case GateKind::CRx: return {c, -kI * s, -kI * s, c};
    case GateKind::Ry: return {c, -s, s, c};
    case GateKind::Rz: return {std::polar(1.0, -half), 0.0, 0.0, std::polar(1.0, half)};
    case GateKind::Swap: break;
  }
  throw Error(ErrorCode::InvalidGate, "swap has no single-target matrix");
}

std::uint64_t initial_index(const Circuit& circuit) {
  std::uint64_t index = 0;
  for (int q = 0; q < circuit.num_qubits(); ++q) {
    if (circuit.initial_state()[q] == InitialState::One) index |= std::uint64_t{1} << q;
  }
  return index;
}

Statevector run(const Circuit& circuit) { return run(circuit, initial_index(circuit)); }

Statevector run(const Circuit& circuit, std::uint64_t basis_index) {
  return run(circuit, Statevector::basis(circuit.num_qubits(), basis_index));
}

Statevector run(const Circuit& circuit, Statevector initial) {
  initial.apply(circuit);
  return initial;
}

std::map<std::string, double> probabilities(const Statevector& state, std::span<const int> subset) {
  for (int q : subset) {
    if (q < 0 || q >= state.num_qubits()) throw Error(ErrorCode::IndexOutOfRange, "qubit " + std::to_string(q));
  }
  std::vector<double> marginal(std::size_t{1} << subset.size(), 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) continue;
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < subset.size(); ++j) key |= ((i >> subset[j]) & 1) << j;
    marginal[key] += p;
  }
  std::map<std::string, double> out;
  for (std::uint64_t key = 0; key < marginal.size(); ++key) {
    if (marginal[key] > 1e-15) out.emplace(bitstring(key, static_cast<int>(subset.size())), marginal[key]);
  }
  return out;
}

std::set<std::string> phase_pattern(const Circuit& oracle, const QubitLayout& layout) {
  if (oracle.num_qubits() != layout.num_qubits()) {
    throw Error(ErrorCode::WidthMismatch, "oracle and layout widths differ");
  }
  const int m = layout.data.count;
  const std::uint64_t out_bit = std::uint64_t{1} << layout.output;
  std::uint64_t ancilla_base = initial_index(oracle) & ~out_bit;
  for (int q = layout.data.begin; q < layout.data.end(); ++q) ancilla_base &= ~(std::uint64_t{1} << q);
  const double r = std::numbers::sqrt2 / 2;

  // Overlap <in|U|in> for data value x with the output in |+> (sign +1) or
  // |-> (sign -1).
  auto overlap = [&](std::uint64_t x, double sign) {
    std::uint64_t base = ancilla_base;
    for (int j = 0; j < m; ++j) {
      if ((x >> j) & 1) base |= std::uint64_t{1} << layout.data[j];
    }
    Statevector state(oracle.num_qubits());
    std::vector<Amplitude> amps(state.dimension(), 0.0);
    amps[base] = r;
    amps[base | out_bit] = sign * r;
    state = Statevector::from_amplitudes(std::move(amps));
    state.apply(oracle);
    const Amplitude s = r * state[base] + sign * r * state[base | out_bit];
    if (std::abs(1.0 - std::norm(s)) > kLeakTolerance) {
      throw Error(ErrorCode::AncillaLeak, "data state " + bitstring(x, m) + " left ancillas disturbed (|overlap|^2 = " +
                                              std::to_string(std::norm(s)) + ")");
    }
    return s;
  };

  const Amplitude reference = overlap(0, +1.0);
  std::set<std::string> flipped;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    const Amplitude relative = overlap(x, -1.0) / reference;
    if (std::abs(relative - 1.0) <= 1e-6) continue;
    if (std::abs(relative + 1.0) <= 1e-6) {
      flipped.insert(bitstring(x, m));
      continue;
    }
    throw Error(ErrorCode::AncillaLeak, "data state " + bitstring(x, m) + " picked up a phase other than +-1");
  }
  return flipped;
}

Eigen::MatrixXcd unitary_of(const Circuit& circuit) {
  if (circuit.num_qubits() > 12) {
    throw Error(ErrorCode::TooManyQubits, "unitary_of supports at most 12 qubits, got " +
                                              std::to_string(circuit.num_qubits()));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.num_qubits());
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto state = run(circuit, static_cast<std::uint64_t>(col));
    for (Eigen::Index row = 0; row < dim; ++row) u(row, col) = state[static_cast<std::size_t>(row)];
  }
  return u;
}

double distance_up_to_global_phase(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::WidthMismatch, "vectors differ in length");
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
  }
  Amplitude phase = 1.0;
  if (std::abs(b[pivot]) > 0.0 && std::abs(a[pivot]) > 0.0) {
    phase = a[pivot] / b[pivot];
    phase /= std::abs(phase);
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  return worst;
}

double distance_up_to_global_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::WidthMismatch, "matrix shapes differ");
  return distance_up_to_global_phase(std::span<const Amplitude>(a.data(), static_cast<std::size_t>(a.size())),
                                     std::span<const Amplitude>(b.data(), static_cast<std::size_t>(b.size())));
}

Statevector embed(const Statevector& logical, std::span<const int> placement, int num_physical) {
  if (static_cast<int>(placement.size()) != logical.num_qubits()) {
    throw Error(ErrorCode::WidthMismatch, "placement size differs from logical width");
  }
  Statevector out(num_physical);
  std::vector<Amplitude> amps(out.dimension(), 0.0);
  const auto src = logical.amplitudes();
  for (std::uint64_t i = 0; i < src.size(); ++i) {
    std::uint64_t j = 0;
    for (std::size_t q = 0; q < placement.size(); ++q) j |= ((i >> q) & 1) << placement[q];
    amps[j] = src[i];
  }
  return Statevector::from_amplitudes(std::move(amps));
}

Statevector extract(const Statevector& physical, std::span<const int> placement) {
  std::uint64_t placed = 0;
  for (int p : placement) placed |= std::uint64_t{1} << p;
  std::vector<Amplitude> amps(std::size_t{1} << placement.size(), 0.0);
  const auto src = physical.amplitudes();
  double stray = 0.0;
  for (std::uint64_t j = 0; j < src.size(); ++j) {
    if (j & ~placed) {
      stray += std::norm(src[j]);
      continue;
    }
    std::uint64_t i = 0;
    for (std::size_t q = 0; q < placement.size(); ++q) i |= ((j >> placement[q]) & 1) << q;
    amps[i] = src[j];
  }
  if (stray > 1e-9) throw std::invalid_argument("unplaced physical qubits are not |0>");
  return Statevector::from_amplitudes(std::move(amps));
}

std::string bitstring(std::uint64_t value, int width) {
  std::string out(static_cast<std::size_t>(width), '0');
  for (int j = 0; j < width; ++j) {
    if ((value >> j) & 1) out[j] = '1';
  }
  return out;
}

}  // namespace gkc::sim
