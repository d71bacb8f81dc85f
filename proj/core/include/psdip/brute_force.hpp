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
#include <functional>
#include <optional>
#include <vector>

#include "psdip/colored_graph.hpp"
#include "psdip/permutation.hpp"

namespace psdip {

/// Largest graph order the exhaustive routines accept.
inline constexpr std::size_t kBruteForceMaxVertices = 10;

/// Everything an exhaustive search over all bijections can say about a pair.
struct BruteForceResult {
  /// All isomorphisms g1 -> g2, in lexicographic order of image vectors.
  std::vector<Permutation> isomorphisms;
  /// All of Aut(g1), lexicographic.
  std::vector<Permutation> automorphisms;
  /// Lexicographically smallest isomorphism, or nullopt if none exists.
  std::optional<Permutation> lex_first;
};

/// Visits every isomorphism g1 -> g2 in increasing lexicographic order of
/// the image vector. The search assigns images to vertices 0, 1, ... in
/// turn, trying targets in increasing order and abandoning a partial map as
/// soon as it breaks a color, a degree or an edge among assigned vertices;
/// the order of visits is therefore exactly the order of all n! bijections
/// restricted to the isomorphisms. `visit` returns false to stop early.
///
/// Throws SizeError for n > kBruteForceMaxVertices and UsageError if the
/// orders differ.
void for_each_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2,
                          const std::function<bool(const Permutation&)>& visit);

std::optional<Permutation> brute_force_lex_first(const ColoredGraph& g1, const ColoredGraph& g2);
std::vector<Permutation> brute_force_isomorphisms(const ColoredGraph& g1, const ColoredGraph& g2);
bool brute_force_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2);

BruteForceResult brute_force_oracles(const ColoredGraph& g1, const ColoredGraph& g2);

}  // namespace psdip
