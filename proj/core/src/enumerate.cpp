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

#include "psdip/enumerate.hpp"

#include <algorithm>
#include <cstdint>

#include "psdip/errors.hpp"

namespace psdip {

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

void for_each_graph(std::size_t n, const std::function<void(const ColoredGraph&)>& visit) {
  if (n > 8) throw SizeError("for_each_graph: n > 8 is not enumerable");
  std::vector<Edge> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
  }
  const std::uint64_t count = std::uint64_t{1} << pairs.size();
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    edges.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1u) edges.push_back(pairs[k]);
    }
    visit(ColoredGraph(n, edges));
  }
}

namespace {

// Every ordered subset of {lo, ..., n-1}.
std::vector<std::vector<nl::Node>> ordered_subsets(std::size_t lo, std::size_t n) {
  std::vector<std::vector<nl::Node>> out;
  const std::size_t k = n - lo;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<nl::Node> subset;
    for (std::size_t b = 0; b < k; ++b) {
      if ((mask >> b) & 1u) subset.push_back(static_cast<nl::Node>(lo + b));
    }
    do {
      out.push_back(subset);
    } while (std::next_permutation(subset.begin(), subset.end()));
  }
  return out;
}

}  // namespace

void for_each_ordered_dag(std::size_t n,
                          const std::function<void(const std::vector<std::vector<nl::Node>>&)>& visit) {
  if (n > 6) throw SizeError("for_each_ordered_dag: n > 6 is not enumerable");
  std::vector<std::vector<std::vector<nl::Node>>> choices(n);
  for (std::size_t v = 0; v < n; ++v) choices[v] = ordered_subsets(v + 1, n);
  std::vector<std::size_t> index(n, 0);
  std::vector<std::vector<nl::Node>> successors(n);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) successors[v] = choices[v][index[v]];
    visit(successors);
    std::size_t v = 0;
    while (v < n && ++index[v] == choices[v].size()) index[v++] = 0;
    if (v == n) break;
  }
}

}  // namespace psdip
