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

#include "gkc/route.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <queue>
#include <random>
#include <set>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

CouplingGraph::CouplingGraph(int num_physical, std::vector<Edge> pairs) : n_(num_physical) {
  if (num_physical < 1) throw Error(ErrorCode::MalformedCoupling, "coupling graph needs at least one qubit");
  for (auto& [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
      throw Error(ErrorCode::IndexOutOfRange, "pair (" + std::to_string(a) + "," + std::to_string(b) + ") outside " +
                                                  std::to_string(n_) + " physical qubits");
    }
    if (a == b) throw Error(ErrorCode::MalformedCoupling, "qubit " + std::to_string(a) + " coupled to itself");
    if (a > b) std::swap(a, b);
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  pairs_ = std::move(pairs);

  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (auto [a, b] : pairs_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  constexpr int kUnreached = std::numeric_limits<int>::max();
  distance_.assign(static_cast<std::size_t>(n_) * n_, kUnreached);
  for (int src = 0; src < n_; ++src) {
    int* row = &distance_[static_cast<std::size_t>(src) * n_];
    std::queue<int> frontier;
    row[src] = 0;
    frontier.push(src);
    while (!frontier.empty()) {
      const int p = frontier.front();
      frontier.pop();
      for (int nb : adjacency_[p]) {
        if (row[nb] == kUnreached) {
          row[nb] = row[p] + 1;
          frontier.push(nb);
        }
      }
    }
    for (int dst = 0; dst < n_; ++dst) {
      if (row[dst] == kUnreached) {
        throw Error(ErrorCode::Disconnected, "physical qubits " + std::to_string(src) + " and " +
                                                 std::to_string(dst) + " are not connected");
      }
    }
  }
}

CouplingGraph CouplingGraph::line(int n) {
  std::vector<Edge> pairs;
  for (int p = 0; p + 1 < n; ++p) pairs.emplace_back(p, p + 1);
  return CouplingGraph(n, std::move(pairs));
}

CouplingGraph CouplingGraph::ring(int n) {
  std::vector<Edge> pairs;
  for (int p = 0; p + 1 < n; ++p) pairs.emplace_back(p, p + 1);
  if (n > 2) pairs.emplace_back(0, n - 1);
  return CouplingGraph(n, std::move(pairs));
}

CouplingGraph CouplingGraph::grid(int rows, int cols, int count) {
  const int n = count < 0 ? rows * cols : std::min(count, rows * cols);
  std::vector<Edge> pairs;
  for (int p = 0; p < n; ++p) {
    const int r = p / cols;
    const int c = p % cols;
    if (c + 1 < cols && p + 1 < n) pairs.emplace_back(p, p + 1);
    if (r + 1 < rows && p + cols < n) pairs.emplace_back(p, p + cols);
  }
  return CouplingGraph(n, std::move(pairs));
}

std::vector<int> CouplingGraph::shortest_path(int a, int b) const {
  std::vector<int> path{a};
  int at = a;
  while (at != b) {
    for (int nb : adjacency_[at]) {
      if (distance(nb, b) == distance(at, b) - 1) {
        at = nb;
        break;
      }
    }
    path.push_back(at);
  }
  return path;
}

CouplingGraph parse_coupling(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int count = -1;
  std::vector<Edge> pairs;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    std::vector<int> values;
    for (const auto& t : tokens) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw Error(ErrorCode::MalformedCoupling, "bad token '" + t + "'");
      }
      values.push_back(v);
    }
    if (count < 0) {
      if (values.size() != 1) throw Error(ErrorCode::MalformedCoupling, "first line must be the qubit count");
      count = values[0];
      continue;
    }
    if (values.size() != 2) throw Error(ErrorCode::MalformedCoupling, "bad pair line '" + line + "'");
    pairs.emplace_back(values[0], values[1]);
  }
  if (count < 0) throw Error(ErrorCode::MalformedCoupling, "missing qubit count");
  return CouplingGraph(count, std::move(pairs));
}

CouplingGraph load_coupling(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedCoupling, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_coupling(buffer.str());
}

std::string to_text(const CouplingGraph& coupling) {
  std::string out = std::to_string(coupling.num_physical()) + '\n';
  for (auto [a, b] : coupling.pairs()) out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
  return out;
}

Mapping Mapping::identity(int num_logical) {
  Mapping m;
  for (int q = 0; q < num_logical; ++q) m.logical_to_physical.push_back(q);
  return m;
}

std::vector<int> Mapping::physical_to_logical(int num_physical) const {
  std::vector<int> out(static_cast<std::size_t>(num_physical), -1);
  for (std::size_t l = 0; l < logical_to_physical.size(); ++l) out[logical_to_physical[l]] = static_cast<int>(l);
  return out;
}

namespace {

struct PassResult {
  std::vector<Gate> gates;
  std::vector<int> final_placement;
  int swaps = 0;
};

class SabrePass {
 public:
  SabrePass(const std::vector<Gate>& gates, const CouplingGraph& coupling, const RoutingOptions& options,
            std::mt19937_64& rng)
      : gates_(gates), coupling_(coupling), options_(options), rng_(rng) {
    const auto count = gates_.size();
    successors_.assign(count, {});
    indegree_.assign(count, 0);
    std::vector<int> last;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<int> preds;
      for (int q : gates_[i].operands()) {
        if (q >= static_cast<int>(last.size())) last.resize(static_cast<std::size_t>(q) + 1, -1);
        if (last[q] >= 0) preds.push_back(last[q]);
        last[q] = static_cast<int>(i);
      }
      std::sort(preds.begin(), preds.end());
      preds.erase(std::unique(preds.begin(), preds.end()), preds.end());
      for (int p : preds) successors_[p].push_back(static_cast<int>(i));
      indegree_[i] = static_cast<int>(preds.size());
    }
  }

  PassResult run(std::vector<int> placement) {
    PassResult result;
    l2p_ = std::move(placement);
    p2l_.assign(static_cast<std::size_t>(coupling_.num_physical()), -1);
    for (std::size_t l = 0; l < l2p_.size(); ++l) p2l_[l2p_[l]] = static_cast<int>(l);
    std::vector<int> indegree = indegree_;
    std::set<int> front;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
      if (indegree[i] == 0) front.insert(static_cast<int>(i));
    }
    std::vector<double> decay(static_cast<std::size_t>(coupling_.num_physical()), 1.0);
    int swaps_since_reset = 0;
    int swaps_since_progress = 0;
    const int stall_limit = 10 * coupling_.num_physical();

    while (!front.empty()) {
      bool progressed = true;
      while (progressed) {
        progressed = false;
        for (auto it = front.begin(); it != front.end();) {
          const Gate& g = gates_[*it];
          if (!executable(g)) {
            ++it;
            continue;
          }
          result.gates.push_back(to_physical(g));
          for (int s : successors_[*it]) {
            if (--indegree[s] == 0) front.insert(s);
          }
          it = front.erase(it);
          progressed = true;
          swaps_since_progress = 0;
        }
      }
      if (front.empty()) break;

      if (swaps_since_progress >= stall_limit) {
        // Walk the oldest blocked gate's first operand toward its partner.
        const Gate& g = gates_[*front.begin()];
        const auto ops = g.operands();
        const auto path = coupling_.shortest_path(l2p_[ops[0]], l2p_[ops[1]]);
        for (std::size_t i = 0; i + 2 < path.size(); ++i) {
          apply_swap(path[i], path[i + 1], result);
        }
        swaps_since_progress = 0;
        continue;
      }

      const auto [p1, p2] = choose_swap(front, decay);
      apply_swap(p1, p2, result);
      decay[p1] += options_.decay_increment;
      decay[p2] += options_.decay_increment;
      if (++swaps_since_reset >= options_.decay_reset_interval) {
        std::fill(decay.begin(), decay.end(), 1.0);
        swaps_since_reset = 0;
      }
      ++swaps_since_progress;
    }
    result.final_placement = l2p_;
    return result;
  }

 private:
  bool executable(const Gate& g) const {
    if (g.arity() < 2) return true;
    const auto ops = g.operands();
    return coupling_.coupled(l2p_[ops[0]], l2p_[ops[1]]);
  }

  Gate to_physical(const Gate& g) const {
    Gate out = g;
    for (auto& c : out.controls) c.qubit = l2p_[c.qubit];
    for (auto& t : out.targets) t = l2p_[t];
    return out;
  }

  void apply_swap(int p1, int p2, PassResult& result) {
    const int l1 = p2l_[p1];
    const int l2 = p2l_[p2];
    std::swap(p2l_[p1], p2l_[p2]);
    if (l1 >= 0) l2p_[l1] = p2;
    if (l2 >= 0) l2p_[l2] = p1;
    result.gates.push_back(Gate::swap(p1, p2));
    ++result.swaps;
  }

  std::vector<int> extended_set(const std::set<int>& front) const {
    std::vector<int> out;
    std::set<int> seen(front.begin(), front.end());
    std::queue<int> frontier;
    for (int f : front) frontier.push(f);
    while (!frontier.empty() && static_cast<int>(out.size()) < options_.extended_set_size) {
      const int g = frontier.front();
      frontier.pop();
      for (int s : successors_[g]) {
        if (!seen.insert(s).second) continue;
        if (gates_[s].arity() == 2) {
          out.push_back(s);
          if (static_cast<int>(out.size()) >= options_.extended_set_size) break;
        }
        frontier.push(s);
      }
    }
    return out;
  }

  double layer_distance(const std::vector<int>& layer) const {
    double total = 0.0;
    for (int g : layer) {
      const auto ops = gates_[g].operands();
      total += coupling_.distance(l2p_[ops[0]], l2p_[ops[1]]);
    }
    return total;
  }

  std::pair<int, int> choose_swap(const std::set<int>& front, const std::vector<double>& decay) {
    std::vector<int> blocked;
    std::set<std::pair<int, int>> candidates;
    for (int g : front) {
      if (gates_[g].arity() != 2) continue;
      blocked.push_back(g);
      for (int q : gates_[g].operands()) {
        const int p = l2p_[q];
        for (int nb : coupling_.neighbors(p)) candidates.emplace(std::min(p, nb), std::max(p, nb));
      }
    }
    const auto extended = extended_set(front);

    double best = std::numeric_limits<double>::infinity();
    std::vector<std::pair<int, int>> tied;
    for (auto [p1, p2] : candidates) {
      swap_placement(p1, p2);
      double score = layer_distance(blocked) / static_cast<double>(blocked.size());
      if (!extended.empty()) {
        score += options_.extended_set_weight * layer_distance(extended) / static_cast<double>(extended.size());
      }
      score *= std::max(decay[p1], decay[p2]);
      swap_placement(p1, p2);
      if (score < best - 1e-12) {
        best = score;
        tied.clear();
      }
      if (score <= best + 1e-12) tied.emplace_back(p1, p2);
    }
    std::uniform_int_distribution<std::size_t> pick(0, tied.size() - 1);
    return tied[pick(rng_)];
  }

  void swap_placement(int p1, int p2) {
    const int l1 = p2l_[p1];
    const int l2 = p2l_[p2];
    std::swap(p2l_[p1], p2l_[p2]);
    if (l1 >= 0) l2p_[l1] = p2;
    if (l2 >= 0) l2p_[l2] = p1;
  }

  const std::vector<Gate>& gates_;
  const CouplingGraph& coupling_;
  const RoutingOptions& options_;
  std::mt19937_64& rng_;
  std::vector<std::vector<int>> successors_;
  std::vector<int> indegree_;
  std::vector<int> l2p_;
  std::vector<int> p2l_;
};

void check_placement(const Mapping& mapping, int num_logical, int num_physical) {
  if (static_cast<int>(mapping.logical_to_physical.size()) != num_logical) {
    throw Error(ErrorCode::WidthMismatch, "initial mapping covers " +
                                              std::to_string(mapping.logical_to_physical.size()) + " of " +
                                              std::to_string(num_logical) + " logical qubits");
  }
  std::vector<bool> used(static_cast<std::size_t>(num_physical), false);
  for (int p : mapping.logical_to_physical) {
    if (p < 0 || p >= num_physical) throw Error(ErrorCode::IndexOutOfRange, "mapped to physical " + std::to_string(p));
    if (used[p]) throw Error(ErrorCode::OverlappingOperands, "physical " + std::to_string(p) + " used twice");
    used[p] = true;
  }
}

}  // namespace

RoutingResult sabre_route(const Circuit& circuit, const CouplingGraph& coupling, const RoutingOptions& options) {
  const int logical = circuit.num_qubits();
  const int physical = coupling.num_physical();
  if (logical > physical) {
    throw Error(ErrorCode::TooFewPhysicalQubits, std::to_string(logical) + " logical qubits on " +
                                                     std::to_string(physical) + " physical qubits");
  }
  for (const auto& g : circuit.gates()) {
    if (g.arity() > 2 || g.has_negative_control()) throw Error(ErrorCode::UnloweredGate, describe(g));
  }

  std::mt19937_64 rng(options.seed);
  const auto& forward = circuit.gates();
  Mapping start = options.initial_mapping.value_or(Mapping::identity(logical));
  check_placement(start, logical, physical);

  SabrePass forward_pass(forward, coupling, options, rng);
  if (options.reverse_traversal && !options.initial_mapping) {
    const std::vector<Gate> backward(forward.rbegin(), forward.rend());
    SabrePass backward_pass(backward, coupling, options, rng);
    auto after_forward = forward_pass.run(start.logical_to_physical).final_placement;
    start.logical_to_physical = backward_pass.run(std::move(after_forward)).final_placement;
  }
  auto pass = forward_pass.run(start.logical_to_physical);

  RoutingResult result;
  result.initial = start;
  result.final.logical_to_physical = pass.final_placement;
  result.swap_count = pass.swaps;

  std::vector<QubitRole> roles(static_cast<std::size_t>(physical), QubitRole::Unused);
  std::vector<InitialState> initial(static_cast<std::size_t>(physical), InitialState::Zero);
  for (int l = 0; l < logical; ++l) {
    roles[start.logical_to_physical[l]] = circuit.roles()[l];
    initial[start.logical_to_physical[l]] = circuit.initial_state()[l];
  }
  result.routed = Circuit(std::move(roles), std::move(initial));
  for (auto& g : pass.gates) result.routed.append(std::move(g));
  std::vector<int> measured;
  for (int l : circuit.measured_qubits()) measured.push_back(result.final.logical_to_physical[l]);
  result.routed.set_measured_qubits(std::move(measured));
  return result;
}

bool verify_constraints(const Circuit& routed, const CouplingGraph& coupling) {
  if (routed.num_qubits() > coupling.num_physical()) return false;
  for (const auto& g : routed.gates()) {
    if (g.arity() > 2) return false;
    if (g.arity() == 2) {
      const auto ops = g.operands();
      if (!coupling.coupled(ops[0], ops[1])) return false;
    }
  }
  return true;
}

std::vector<std::string> layout_comments(const Mapping& final) {
  std::vector<std::string> out;
  for (std::size_t l = 0; l < final.logical_to_physical.size(); ++l) {
    out.push_back("final_layout: logical " + std::to_string(l) + " -> physical " +
                  std::to_string(final.logical_to_physical[l]));
  }
  return out;
}

CouplingGraph coupling_from_spec(const std::string& spec) {
  auto bad = [&] { return Error(ErrorCode::MalformedCoupling, "bad topology '" + spec + "'"); };
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) throw bad();
      return v;
    } catch (const std::logic_error&) {
      throw bad();
    }
  };
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto kind = spec.substr(0, colon);
    const auto rest = spec.substr(colon + 1);
    if (kind == "line") return CouplingGraph::line(to_int(rest));
    if (kind == "ring") return CouplingGraph::ring(to_int(rest));
    if (kind == "grid") {
      const auto x = rest.find('x');
      if (x == std::string::npos) throw bad();
      const auto second = rest.find(':', x);
      const int rows = to_int(rest.substr(0, x));
      const int cols = to_int(rest.substr(x + 1, second == std::string::npos ? std::string::npos : second - x - 1));
      const int count = second == std::string::npos ? -1 : to_int(rest.substr(second + 1));
      return CouplingGraph::grid(rows, cols, count);
    }
  }
  return load_coupling(spec);
}

}  // namespace gkc
