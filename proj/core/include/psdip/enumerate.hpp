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
#include <vector>

#include "psdip/colored_graph.hpp"
#include "psdip/config_graph.hpp"
#include "psdip/permutation.hpp"

namespace psdip {

/// All n! permutations of degree n in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t n);

/// Calls `visit` for each of the 2^(n(n-1)/2) labeled uncolored graphs on
/// n vertices; bit k of the index selects the k-th pair in (0,1), (0,2), ...,
/// (1,2), ... order. Throws SizeError for n > 8.
void for_each_graph(std::size_t n, const std::function<void(const ColoredGraph&)>& visit);

/// Calls `visit` with the successor lists of every DAG on n nodes whose
/// edges point from lower to higher labels, once for every ordering of
/// every successor set. Throws SizeError for n > 6.
void for_each_ordered_dag(std::size_t n,
                          const std::function<void(const std::vector<std::vector<nl::Node>>&)>& visit);

}  // namespace psdip
