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

#include "reference.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>

namespace gkc::reference {

namespace {

using cd = std::complex<double>;
using Matrix2 = std::array<cd, 4>;  // row-major

Matrix2 single_matrix(GateKind kind, double theta) {
  const double r = 1.0 / std::sqrt(2.0);
  const cd i(0, 1);
  switch (kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::MCT: return {0, 1, 1, 0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::Z:
    case GateKind::CZ:
    case GateKind::MCZ: return {1, 0, 0, -1};
    case GateKind::S: return {1, 0, 0, i};
    case GateKind::Sdg: return {1, 0, 0, -i};
    case GateKind::T: return {1, 0, 0, std::polar(1.0, M_PI / 4)};
    case GateKind::Tdg: return {1, 0, 0, std::polar(1.0, -M_PI / 4)};
    case GateKind::Rx:
    case GateKind::CRx: return {std::cos(theta / 2), -i * std::sin(theta / 2), -i * std::sin(theta / 2), std::cos(theta / 2)};
    case GateKind::Ry: return {std::cos(theta / 2), -std::sin(theta / 2), std::sin(theta / 2), std::cos(theta / 2)};
    case GateKind::Rz: return {std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2)};
    default: break;
  }
  throw std::logic_error("no single-target matrix");
}

struct Contraction {
  int n;
  std::vector<Edge> edges;
};

std::vector<Edge> normalize(std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

std::int64_t power(std::int64_t base, int exp) {
  std::int64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

}  // namespace

std::int64_t chromatic_polynomial(int num_vertices, const std::vector<Edge>& edges, int k) {
  const auto e = normalize(edges);
  if (e.empty()) return power(k, num_vertices);
  const auto [u, v] = e.back();
  std::vector<Edge> deleted(e.begin(), e.end() - 1);
  // Contract v into u, then renumber vertices above v down by one.
  std::vector<Edge> contracted;
  for (auto [a, b] : deleted) {
    if (a == v) a = u;
    if (b == v) b = u;
    if (a > v) --a;
    if (b > v) --b;
    if (a != b) contracted.emplace_back(a, b);
  }
  return chromatic_polynomial(num_vertices, deleted, k) - chromatic_polynomial(num_vertices - 1, contracted, k);
}

std::set<std::string> brute_force_colorings(int num_vertices, const std::vector<Edge>& edges, int k) {
  int c = 0;
  while ((1 << c) < k) ++c;
  std::set<std::string> out;
  std::vector<int> colors(static_cast<std::size_t>(num_vertices), 0);
  while (true) {
    bool ok = true;
    for (auto [u, v] : edges) ok = ok && colors[u] != colors[v];
    if (ok) {
      std::string bits;
      for (int col : colors) {
        for (int b = c - 1; b >= 0; --b) bits += ((col >> b) & 1) ? '1' : '0';
      }
      out.insert(bits);
    }
    int i = 0;
    while (i < num_vertices && ++colors[i] == k) colors[i++] = 0;
    if (i == num_vertices) break;
  }
  return out;
}

std::vector<std::vector<Edge>> all_edge_subsets(int n) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::vector<Edge>> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    }
    out.push_back(std::move(edges));
  }
  return out;
}

Eigen::MatrixXcd gate_matrix(const Gate& gate, int num_qubits) {
  const std::size_t dim = std::size_t{1} << num_qubits;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const auto c = static_cast<Eigen::Index>(col);
    if (gate.kind == GateKind::Swap) {
      const int a = gate.targets[0], b = gate.targets[1];
      std::size_t row = col;
      const bool ba = col >> a & 1, bb = col >> b & 1;
      row &= ~((std::size_t{1} << a) | (std::size_t{1} << b));
      row |= (std::size_t{bb} << a) | (std::size_t{ba} << b);
      m(static_cast<Eigen::Index>(row), c) = 1;
      continue;
    }
    bool active = true;
    for (const auto& ctl : gate.controls) {
      const bool bit = col >> ctl.qubit & 1;
      active = active && (bit == (ctl.polarity == Polarity::Positive));
    }
    if (!active) {
      m(c, c) = 1;
      continue;
    }
    const int t = gate.targets[0];
    const auto u = single_matrix(gate.kind, gate.angle);
    const int in = col >> t & 1;
    const std::size_t base = col & ~(std::size_t{1} << t);
    m(static_cast<Eigen::Index>(base), c) += u[0 * 2 + in];
    m(static_cast<Eigen::Index>(base | (std::size_t{1} << t)), c) += u[1 * 2 + in];
  }
  return m;
}

Eigen::MatrixXcd circuit_matrix(const Circuit& circuit) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.num_qubits());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : circuit.gates()) u = gate_matrix(g, circuit.num_qubits()) * u;
  return u;
}

Eigen::MatrixXcd mct_matrix(int num_controls) {
  const int n = num_controls + 1;
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  const std::size_t all = (std::size_t{1} << num_controls) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t col = 0; col < static_cast<std::size_t>(dim); ++col) {
    const std::size_t row = (col & all) == all ? col ^ (std::size_t{1} << num_controls) : col;
    m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = 1;
  }
  return m;
}

Eigen::MatrixXcd diffusion_matrix(int m) {
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << m);
  const double N = static_cast<double>(dim);
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Constant(dim, dim, 2.0 / N);
  d -= Eigen::MatrixXcd::Identity(dim, dim);
  return d;
}

double phase_insensitive_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return INFINITY;
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(b(r, c)) < 1e-12) return INFINITY;
  const cd phase = a(r, c) / b(r, c);
  const cd unit = phase / std::abs(phase);
  return (a - unit * b).cwiseAbs().maxCoeff();
}

bool zero_swap_placement_exists(const Circuit& circuit, const CouplingGraph& coupling) {
  const int n = circuit.num_qubits();
  const int p = coupling.num_physical();
  if (n > p) return false;
  std::vector<int> physical(static_cast<std::size_t>(p));
  std::iota(physical.begin(), physical.end(), 0);
  // Enumerate injective maps as ordered prefixes of permutations of the
  // physical qubits; each prefix is visited (p-n)! times, which is fine at
  // test sizes.
  do {
    bool ok = true;
    for (const auto& g : circuit.gates()) {
      const auto ops = g.operands();
      if (ops.size() == 2 && coupling.distance(physical[ops[0]], physical[ops[1]]) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(physical.begin(), physical.end()));
  return false;
}

Circuit random_circuit(int num_qubits, int num_gates, std::mt19937_64& rng, bool allow_multi_controlled) {
  Circuit c(num_qubits);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  auto pick = [&](int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); };
  auto distinct = [&](int count) {
    std::vector<int> q(static_cast<std::size_t>(num_qubits));
    std::iota(q.begin(), q.end(), 0);
    std::shuffle(q.begin(), q.end(), rng);
    q.resize(static_cast<std::size_t>(count));
    return q;
  };
  const int kinds = allow_multi_controlled && num_qubits >= 3 ? 13 : 11;
  for (int i = 0; i < num_gates; ++i) {
    const int kind = num_qubits >= 2 ? pick(kinds) : pick(8);
    const int q = pick(num_qubits);
    switch (kind) {
      case 0: c.append(Gate::h(q)); break;
      case 1: c.append(Gate::x(q)); break;
      case 2: c.append(Gate::z(q)); break;
      case 3: c.append(Gate::s(q)); break;
      case 4: c.append(Gate::t(q)); break;
      case 5: c.append(Gate::rx(q, angle(rng))); break;
      case 6: c.append(Gate::ry(q, angle(rng))); break;
      case 7: c.append(Gate::rz(q, angle(rng))); break;
      case 8: {
        auto ab = distinct(2);
        c.append(Gate::cx(ab[0], ab[1]));
        break;
      }
      case 9: {
        auto ab = distinct(2);
        c.append(Gate::cz(ab[0], ab[1]));
        break;
      }
      case 10: {
        auto ab = distinct(2);
        c.append(Gate::crx(ab[0], ab[1], angle(rng)));
        break;
      }
      default: {
        const int width = 3 + pick(num_qubits - 2);
        auto qs = distinct(width);
        std::vector<Control> controls;
        for (int j = 0; j + 1 < width; ++j) {
          controls.push_back({qs[j], pick(2) ? Polarity::Positive : Polarity::Negative});
        }
        c.append(kind == 11 ? Gate::mct(controls, qs.back()) : Gate::mcz(controls, qs.back()));
        break;
      }
    }
  }
  return c;
}

}  // namespace gkc::reference
