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

#include "gkc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gkc/error.hpp"

namespace gkc {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto end = text.find('\n');
    auto line = text.substr(0, end);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    auto start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::string_view strip_comment(std::string_view line) {
  auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

bool parse_int(std::string_view token, int& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<Edge> edges) : n_(num_vertices) {
  if (num_vertices < 1) {
    throw Error(ErrorCode::MalformedEdgeList, "graph needs at least one vertex");
  }
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") outside " + std::to_string(n_) + " vertices");
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::MalformedEdgeList,
                "duplicate edge (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
  }
  edges_ = std::move(edges);
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Graph parse_adjacency(std::string_view text) {
  std::vector<std::vector<int>> rows;
  for (auto line : split_lines(text)) {
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    std::vector<int> row;
    for (auto token : tokens) {
      int value = 0;
      if (!parse_int(token, value) || (value != 0 && value != 1)) {
        throw Error(ErrorCode::MalformedMatrix,
                    "entry '" + std::string(token) + "' is not 0 or 1");
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  const auto n = rows.size();
  if (n == 0) throw Error(ErrorCode::MalformedMatrix, "empty matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorCode::MalformedMatrix,
                  "row " + std::to_string(i) + " has " + std::to_string(rows[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != 0) throw Error(ErrorCode::SelfLoop, "nonzero diagonal at vertex " + std::to_string(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorCode::AsymmetricMatrix,
                    "entries (" + std::to_string(i) + "," + std::to_string(j) + ") and (" +
                        std::to_string(j) + "," + std::to_string(i) + ") differ");
      }
      if (rows[i][j] == 1) edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int declared = -1;
  int largest = -1;
  bool first = true;
  for (auto raw : split_lines(text)) {
    auto tokens = split_tokens(strip_comment(raw));
    if (tokens.empty()) continue;
    if (first && tokens.size() == 1) {
      if (!parse_int(tokens[0], declared) || declared < 1) {
        throw Error(ErrorCode::MalformedEdgeList, "bad vertex count '" + std::string(tokens[0]) + "'");
      }
      first = false;
      continue;
    }
    first = false;
    int u = 0;
    int v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v) || u < 0 || v < 0) {
      throw Error(ErrorCode::MalformedEdgeList, "bad edge line '" + std::string(raw) + "'");
    }
    largest = std::max({largest, u, v});
    edges.emplace_back(u, v);
  }
  int n = declared > 0 ? declared : largest + 1;
  if (n < 1) throw Error(ErrorCode::MalformedEdgeList, "no vertices");
  return Graph(n, std::move(edges));
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedMatrix, "cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  if (path.extension() == ".edg") return parse_edge_list(buffer.str());
  return parse_adjacency(buffer.str());
}

std::string to_adjacency(const Graph& graph) {
  const int n = graph.num_vertices();
  std::vector<std::string> rows(n, std::string(2 * n - 1, ' '));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) rows[i][2 * j] = '0';
  }
  for (auto [u, v] : graph.edges()) {
    rows[u][2 * v] = '1';
    rows[v][2 * u] = '1';
  }
  std::string out;
  for (auto& row : rows) out += row + '\n';
  return out;
}

std::string to_edge_list(const Graph& graph) {
  std::string out = std::to_string(graph.num_vertices()) + '\n';
  for (auto [u, v] : graph.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

int color_bits(int k) {
  int bits = 0;
  while ((1 << bits) < k) ++bits;
  return bits;
}

Instance make_instance(Graph graph, int k) {
  if (k < 2) throw Error(ErrorCode::InvalidK, "k must be at least 2, got " + std::to_string(k));
  if (k > (1 << 16)) throw Error(ErrorCode::InvalidK, "k=" + std::to_string(k) + " is unreasonably large");
  Instance instance;
  instance.graph = std::move(graph);
  instance.k = k;
  instance.bits_per_vertex = color_bits(k);
  for (int color = k; color < (1 << instance.bits_per_vertex); ++color) {
    instance.invalid_colors.push_back(color);
  }
  return instance;
}

}  // namespace gkc
