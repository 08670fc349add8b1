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

#include "gkc/error.hpp"
#include "gkc/graph.hpp"

namespace gkc {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no gkc::Error thrown";
  return ErrorCode::AncillaLeak;
}

TEST(Graph, ParsesAdjacencyWithComments) {
  const auto g = parse_adjacency("# triangle\n0 1 1\n\n1 0 1\n1 1 0\n");
  EXPECT_EQ(g.num_vertices(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(Graph, RejectsBadMatrices) {
  EXPECT_EQ(code_of([] { parse_adjacency("0 1\n1 0 1\n"); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { parse_adjacency("0 2\n2 0\n"); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { parse_adjacency("0 x\n1 0\n"); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { parse_adjacency(""); }), ErrorCode::MalformedMatrix);
  EXPECT_EQ(code_of([] { parse_adjacency("0 1\n0 0\n"); }), ErrorCode::AsymmetricMatrix);
  EXPECT_EQ(code_of([] { parse_adjacency("1 0\n0 0\n"); }), ErrorCode::SelfLoop);
}

TEST(Graph, ParsesEdgeLists) {
  const auto counted = parse_edge_list("5\n0 1\n3 2\n");
  EXPECT_EQ(counted.num_vertices(), 5);
  EXPECT_EQ(counted.edges(), (std::vector<Edge>{{0, 1}, {2, 3}}));
  const auto inferred = parse_edge_list("# path\n0 1\n1 2\n");
  EXPECT_EQ(inferred.num_vertices(), 3);
  EXPECT_EQ(code_of([] { parse_edge_list("0 1\n1 0\n"); }), ErrorCode::MalformedEdgeList);
  EXPECT_EQ(code_of([] { parse_edge_list("0 1 2\n"); }), ErrorCode::MalformedEdgeList);
  EXPECT_EQ(code_of([] { parse_edge_list("2\n0 3\n"); }), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(code_of([] { parse_edge_list("1 1\n"); }), ErrorCode::SelfLoop);
}

TEST(Graph, RoundTripsThroughBothFormats) {
  const Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(parse_adjacency(to_adjacency(g)), g);
  EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  const Graph isolated(3, {});
  EXPECT_EQ(parse_edge_list(to_edge_list(isolated)), isolated);
}

TEST(Graph, LoadsByExtension) {
  const std::string dir = GKC_DATA_DIR;
  EXPECT_EQ(load_graph(dir + "/k3.adj").num_edges(), 3);
  EXPECT_EQ(load_graph(dir + "/c4.edg"), Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(code_of([&] { load_graph(dir + "/bad.adj"); }), ErrorCode::AsymmetricMatrix);
  EXPECT_THROW(load_graph(dir + "/missing.adj"), Error);
}

TEST(Graph, ColorBits) {
  const std::vector<std::pair<int, int>> cases = {{2, 1}, {3, 2}, {4, 2}, {5, 3}, {8, 3}, {9, 4}, {16, 4}, {17, 5}};
  for (auto [k, c] : cases) EXPECT_EQ(color_bits(k), c) << "k=" << k;
}

TEST(Graph, InstanceListsInvalidColors) {
  const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  EXPECT_EQ(make_instance(k3, 3).invalid_colors, std::vector<int>{3});
  EXPECT_TRUE(make_instance(k3, 4).invalid_colors.empty());
  EXPECT_EQ(make_instance(k3, 5).invalid_colors, (std::vector<int>{5, 6, 7}));
  EXPECT_EQ(make_instance(k3, 3).data_width(), 6);
  EXPECT_EQ(code_of([&] { make_instance(k3, 1); }), ErrorCode::InvalidK);
}

}  // namespace
}  // namespace gkc
