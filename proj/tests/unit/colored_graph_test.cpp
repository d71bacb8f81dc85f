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

#include "psdip/colored_graph.hpp"

#include <gtest/gtest.h>

#include "psdip/enumerate.hpp"
#include "psdip/errors.hpp"
#include "psdip/rng.hpp"
#include "support/generators.hpp"

namespace psdip {
namespace {

ColoredGraph c4() { return ColoredGraph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }
ColoredGraph c4_relabeled() {
  return ColoredGraph(4, std::vector<Edge>{{0, 2}, {2, 1}, {1, 3}, {3, 0}});
}

TEST(ColoredGraphTest, BasicQueries) {
  const auto g = c4();
  EXPECT_EQ(g.n(), 4u);
  EXPECT_EQ(g.edge_count(), 4u);
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_TRUE(g.has_edge(0, 3));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(g.degree(2), 2u);
  EXPECT_TRUE(g.is_uncolored());
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(ColoredGraphTest, RepeatedEdgesCollapse) {
  const ColoredGraph g(3, std::vector<Edge>{{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(ColoredGraphTest, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(ColoredGraph(3, std::vector<Edge>{{1, 1}}), UsageError);
  EXPECT_THROW(ColoredGraph(3, std::vector<Edge>{{0, 3}}), UsageError);
  EXPECT_THROW(ColoredGraph(3, std::vector<Edge>{}, std::vector<Color>{0, 1}), UsageError);
}

TEST(ColoredGraphTest, RelabeledCycleIsIsomorphicUnderTheRelabeling) {
  // Hand check: 01 -> 02, 12 -> 21, 23 -> 13, 30 -> 30.
  EXPECT_TRUE(is_isomorphism(c4(), c4_relabeled(), Permutation{0, 2, 1, 3}));
  EXPECT_FALSE(is_isomorphism(c4(), c4_relabeled(), Permutation::identity(4)));
  EXPECT_EQ(c4().relabeled(Permutation{0, 2, 1, 3}), c4_relabeled());
}

TEST(ColoredGraphTest, IsomorphismMustPreserveColors) {
  auto a = c4();
  auto b = c4();
  a.set_color(0, 1);
  b.set_color(1, 1);
  EXPECT_FALSE(is_isomorphism(a, b, Permutation::identity(4)));
  EXPECT_TRUE(is_isomorphism(a, b, Permutation{1, 2, 3, 0}));
}

TEST(ColoredGraphTest, IsomorphismDegreeMismatchIsUsageError) {
  EXPECT_THROW(is_isomorphism(c4(), ColoredGraph(3), Permutation::identity(4)), UsageError);
  EXPECT_THROW(is_isomorphism(c4(), c4(), Permutation::identity(3)), UsageError);
}

TEST(ColoredGraphTest, RelabelCarriesColors) {
  ColoredGraph g(3, std::vector<Edge>{{0, 1}}, {5, 6, 7});
  const auto h = g.relabeled(Permutation{2, 0, 1});
  EXPECT_EQ(h.color(2), 5u);
  EXPECT_EQ(h.color(0), 6u);
  EXPECT_EQ(h.color(1), 7u);
  EXPECT_TRUE(h.has_edge(2, 0));
  EXPECT_TRUE(is_isomorphism(g, h, Permutation{2, 0, 1}));
}

TEST(ColoredGraphTest, IsomorphismCheckMatchesDefinitionExhaustively) {
  // Definition-level check over every 4-vertex graph and every bijection.
  const auto perms = all_permutations(4);
  for_each_graph(4, [&](const ColoredGraph& g) {
    for (const auto& p : perms) {
      const auto h = g.relabeled(p);
      for (const auto& q : perms) {
        bool expected = true;
        for (Point u = 0; u < 4; ++u) {
          for (Point v = 0; v < 4; ++v) {
            if (u != v && g.has_edge(u, v) != h.has_edge(q(u), q(v))) expected = false;
          }
        }
        ASSERT_EQ(is_isomorphism(g, h, q), expected);
      }
    }
  });
}

TEST(ColoredGraphTest, IndividualizePinsPrefixPositions) {
  const auto g = c4();
  const Color base = color_base(g, g);
  EXPECT_EQ(base, 1u);
  const std::vector<Point> a{0, 1};
  const std::vector<Point> b{1, 2};
  const auto ga = individualize(g, a, base);
  const auto gb = individualize(g, b, base);
  EXPECT_NE(ga.color(0), ga.color(1));
  EXPECT_EQ(ga.color(0), gb.color(1));
  EXPECT_EQ(ga.color(1), gb.color(2));
  EXPECT_EQ(ga.color(2), 0u);
  // Rotation by one maps 0 -> 1, 1 -> 2.
  EXPECT_TRUE(is_isomorphism(ga, gb, Permutation{1, 2, 3, 0}));
  EXPECT_FALSE(is_isomorphism(ga, gb, Permutation::identity(4)));
}

TEST(ColoredGraphTest, IndividualizeKeepsOriginalColorsDistinct) {
  ColoredGraph g(2, std::vector<Edge>{{0, 1}}, {0, 1});
  const Color base = color_base(g, g);
  const std::vector<Point> p0{0};
  const std::vector<Point> p1{1};
  // Pinning vertices of different original colors must not make them match.
  EXPECT_NE(individualize(g, p0, base).color(0), individualize(g, p1, base).color(1));
}

TEST(ColoredGraphTest, IndividualizeRejectsRepeatsAndRange) {
  const auto g = c4();
  const std::vector<Point> twice{1, 1};
  const std::vector<Point> out_of_range{4};
  EXPECT_THROW(individualize(g, twice, 1), UsageError);
  EXPECT_THROW(individualize(g, out_of_range, 1), UsageError);
}

TEST(ColoredGraphTest, DegenerateOrders) {
  const ColoredGraph empty(0);
  EXPECT_TRUE(is_isomorphism(empty, empty, Permutation::identity(0)));
  const ColoredGraph single(1);
  EXPECT_TRUE(is_isomorphism(single, single, Permutation::identity(1)));
}

}  // namespace
}  // namespace psdip
