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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "psdip/errors.hpp"

namespace psdip {
namespace {

TEST(EnumerateTest, PermutationCountsAndOrder) {
  const auto perms = all_permutations(4);
  EXPECT_EQ(perms.size(), 24u);
  EXPECT_TRUE(std::is_sorted(perms.begin(), perms.end()));
  EXPECT_EQ(all_permutations(0).size(), 1u);
}

TEST(EnumerateTest, GraphCounts) {
  for (std::size_t n = 0; n <= 5; ++n) {
    std::set<std::vector<Edge>> seen;
    for_each_graph(n, [&](const ColoredGraph& g) { seen.insert(g.edges()); });
    EXPECT_EQ(seen.size(), std::size_t{1} << (n * (n - 1) / 2)) << "n = " << n;
  }
  EXPECT_THROW(for_each_graph(9, [](const ColoredGraph&) {}), SizeError);
}

TEST(EnumerateTest, OrderedDagsHaveForwardEdgesOnly) {
  std::size_t count = 0;
  for_each_ordered_dag(3, [&](const std::vector<std::vector<nl::Node>>& succ) {
    ++count;
    for (std::size_t v = 0; v < succ.size(); ++v) {
      std::set<nl::Node> distinct(succ[v].begin(), succ[v].end());
      EXPECT_EQ(distinct.size(), succ[v].size());
      for (auto w : succ[v]) EXPECT_GT(static_cast<std::size_t>(w), v);
    }
  });
  // Node 0: ordered subsets of {1, 2} = 5; node 1: subsets of {2} = 2; node 2: 1.
  EXPECT_EQ(count, 10u);
  EXPECT_THROW(for_each_ordered_dag(7, [](const auto&) {}), SizeError);
}

}  // namespace
}  // namespace psdip
