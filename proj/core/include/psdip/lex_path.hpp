// Copyright 2026 The psdip Authors
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

#include <cstddef>
#include <optional>
#include <vector>

#include "psdip/config_graph.hpp"

namespace psdip::nl {

using Path = std::vector<Node>;

/// Minimal number of edges from every node to an accepting node (nullopt if
/// none is reachable). Plain reverse breadth-first search over the explicit
/// graph; it stands in for the NL = coNL certificate and makes no attempt
/// at logarithmic space.
std::vector<std::optional<std::size_t>> accepting_distances(const ConfigGraph& g);

std::optional<std::size_t> shortest_accepting_length(const ConfigGraph& g, Node v);

/// Shortest accepting path from the start whose sequence of choice indices
/// is lexicographically first. From the current node with t steps left it
/// moves to the first successor, in choice order, whose distance to
/// acceptance is exactly t - 1.
std::optional<Path> lex_first_shortest_path(const ConfigGraph& g);

inline constexpr std::size_t kPathEnumerationBound = 20'000'000;

/// Exhaustive oracle: enumerates every walk of length 0, 1, 2, ... from the
/// start until some walk ends in an accepting node, then returns the one
/// with the smallest choice-index sequence among all walks of that length.
/// Throws SizeError once more than `bound` walk steps have been explored.
std::optional<Path> brute_force_lex_first(const ConfigGraph& g,
                                          std::size_t bound = kPathEnumerationBound);

}  // namespace psdip::nl
