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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gkc {

/// Undirected edge with `first < second`.
using Edge = std::pair<int, int>;

/// Simple undirected, unweighted graph on vertices 0..n-1.
///
/// Edges are stored canonicalized (smaller endpoint first) in lexicographic
/// order, so two graphs with the same edge set compare equal.
class Graph {
 public:
  Graph() = default;
  /// Throws IndexOutOfRange, SelfLoop or MalformedEdgeList (duplicates).
  explicit Graph(int num_vertices, std::vector<Edge> edges = {});

  int num_vertices() const noexcept { return n_; }
  int num_edges() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  bool adjacent(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Parses n rows of n whitespace-separated 0/1 entries. Blank lines and
/// lines starting with '#' are skipped.
Graph parse_adjacency(std::string_view text);

/// Parses one "i j" pair per line; '#' starts a comment. An optional first
/// data line holding a single integer fixes the vertex count, otherwise it
/// is one more than the largest endpoint.
Graph parse_edge_list(std::string_view text);

/// Dispatches on extension: ".edg" is an edge list, anything else an
/// adjacency matrix.
Graph load_graph(const std::filesystem::path& path);

std::string to_adjacency(const Graph& graph);
std::string to_edge_list(const Graph& graph);

/// Number of bits needed to encode k colors, ceil(log2 k).
int color_bits(int k);

/// A k-coloring decision problem.
struct Instance {
  Graph graph;
  int k = 0;
  int bits_per_vertex = 0;
  /// Bit patterns in [k, 2^bits_per_vertex) that encode no legal color.
  std::vector<int> invalid_colors;

  int num_vertices() const { return graph.num_vertices(); }
  int data_width() const { return graph.num_vertices() * bits_per_vertex; }
};

/// Throws InvalidK when k < 2.
Instance make_instance(Graph graph, int k);

}  // namespace gkc
