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

#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gkc/graph.hpp"

namespace gkc {

/// True iff every color is below k and every edge joins different colors.
bool is_proper(const Graph& graph, std::span<const int> colors, int k);

/// Colors encoded by a data bitstring: vertex v owns characters
/// [v*bits, (v+1)*bits), most significant bit first.
std::vector<int> decode_colors(std::string_view bits, int bits_per_vertex);
std::string encode_colors(std::span<const int> colors, int bits_per_vertex);

struct SolutionSet {
  std::set<std::string> bitstrings;
  std::uint64_t count() const { return bitstrings.size(); }
  /// Search-space size 2^(n*bits).
  std::uint64_t space = 0;
};

/// Brute-force enumeration of every proper coloring. Throws TooLarge when
/// the data width exceeds 24 bits.
SolutionSet solutions(const Instance& instance);

}  // namespace gkc
