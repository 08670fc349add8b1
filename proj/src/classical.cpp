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

#include "gkc/classical.hpp"

#include "gkc/error.hpp"

namespace gkc {

bool is_proper(const Graph& graph, std::span<const int> colors, int k) {
  if (static_cast<int>(colors.size()) != graph.num_vertices()) {
    throw Error(ErrorCode::WidthMismatch, "assignment length differs from vertex count");
  }
  for (int c : colors) {
    if (c < 0 || c >= k) return false;
  }
  for (auto [u, v] : graph.edges()) {
    if (colors[u] == colors[v]) return false;
  }
  return true;
}

std::vector<int> decode_colors(std::string_view bits, int bits_per_vertex) {
  if (bits_per_vertex < 1 || bits.size() % bits_per_vertex != 0) {
    throw Error(ErrorCode::WidthMismatch, "bitstring length is not a multiple of the color width");
  }
  std::vector<int> colors(bits.size() / bits_per_vertex, 0);
  for (std::size_t v = 0; v < colors.size(); ++v) {
    for (int b = 0; b < bits_per_vertex; ++b) {
      colors[v] = (colors[v] << 1) | (bits[v * bits_per_vertex + b] == '1' ? 1 : 0);
    }
  }
  return colors;
}

std::string encode_colors(std::span<const int> colors, int bits_per_vertex) {
  std::string out;
  for (int c : colors) {
    for (int b = bits_per_vertex - 1; b >= 0; --b) out.push_back(((c >> b) & 1) ? '1' : '0');
  }
  return out;
}

SolutionSet solutions(const Instance& instance) {
  const int width = instance.data_width();
  if (width > 24) {
    throw Error(ErrorCode::TooLarge, std::to_string(width) + " data bits exceeds the enumeration limit of 24");
  }
  const int n = instance.num_vertices();
  const int c = instance.bits_per_vertex;
  SolutionSet out;
  out.space = std::uint64_t{1} << width;
  std::vector<int> colors(static_cast<std::size_t>(n));
  for (std::uint64_t code = 0; code < out.space; ++code) {
    // Vertex v's color occupies bits [v*c, (v+1)*c) counted from the most
    // significant end of the width-bit code.
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<int>((code >> ((n - 1 - v) * c)) & ((1u << c) - 1));
    }
    if (is_proper(instance.graph, colors, instance.k)) out.bitstrings.insert(encode_colors(colors, c));
  }
  return out;
}

}  // namespace gkc
