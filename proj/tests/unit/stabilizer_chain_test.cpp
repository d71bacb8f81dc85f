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

#include "psdip/stabilizer_chain.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "psdip/brute_force.hpp"
#include "psdip/errors.hpp"
#include "psdip/rng.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace psdip {
namespace {

// Dihedral group of the 4-cycle: rotation and reflection.
GeneratorSet d4() { return GeneratorSet(4, {Permutation{1, 2, 3, 0}, Permutation{0, 3, 2, 1}}); }

TEST(StabilizerChainTest, DihedralGroupOfSquare) {
  const auto chain = schreier_sims(d4());
  EXPECT_EQ(chain.order(), 8u);
  EXPECT_EQ(chain.base(), (std::vector<Point>{0, 1}));
  EXPECT_EQ(chain.levels()[0].orbit, (std::vector<Point>{0, 1, 2, 3}));
  EXPECT_EQ(chain.levels()[1].orbit, (std::vector<Point>{1, 3}));
  EXPECT_TRUE(chain.contains(Permutation{2, 1, 0, 3}));
  EXPECT_FALSE(chain.contains(Permutation{1, 0, 2, 3}));
}

TEST(StabilizerChainTest, TrivialAndEmptyGroups) {
  const auto chain = schreier_sims(GeneratorSet(5));
  EXPECT_EQ(chain.order(), 1u);
  EXPECT_TRUE(chain.levels().empty());
  EXPECT_TRUE(chain.contains(Permutation::identity(5)));
  EXPECT_FALSE(chain.contains(Permutation{1, 0, 2, 3, 4}));
  EXPECT_EQ(chain.prefix_orbit(3), (std::vector<Point>{3}));

  const auto zero = schreier_sims(GeneratorSet(0));
  EXPECT_EQ(zero.order(), 1u);
  EXPECT_TRUE(zero.contains(Permutation::identity(0)));

  const auto ids = schreier_sims(GeneratorSet(3, {Permutation::identity(3)}));
  EXPECT_EQ(ids.order(), 1u);
}

TEST(StabilizerChainTest, SymmetricGroupOrder) {
  // S_10 from a transposition and a 10-cycle.
  std::vector<Point> cyc(10);
  for (Point i = 0; i < 10; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % 10;
  std::vector<Point> swap01{1, 0, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto chain = schreier_sims(GeneratorSet(10, {Permutation(swap01), Permutation(cyc)}));
  EXPECT_EQ(chain.order(), 3628800u);
}

TEST(StabilizerChainTest, OrderOverflowIsSizeError) {
  std::vector<Point> cyc(30);
  for (Point i = 0; i < 30; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % 30;
  std::vector<Point> swap01(30);
  for (Point i = 0; i < 30; ++i) swap01[static_cast<std::size_t>(i)] = i;
  std::swap(swap01[0], swap01[1]);
  const auto chain = schreier_sims(GeneratorSet(30, {Permutation(swap01), Permutation(cyc)}));
  EXPECT_THROW(chain.order(), SizeError);
}

TEST(StabilizerChainTest, GeneratorDegreeMismatchIsUsageError) {
  EXPECT_THROW(GeneratorSet(3, {Permutation::identity(4)}), UsageError);
  EXPECT_THROW(schreier_sims(d4()).sift(Permutation::identity(3)), UsageError);
}

TEST(StabilizerChainTest, LevelStructureInvariants) {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(9);
    const auto g = testing::random_test_graph(rng, n);
    const auto aut = brute_force_isomorphisms(g, g);
    GeneratorSet gens(n);
    for (int k = 0; k < 3; ++k) gens.add(aut[rng.below(aut.size())]);
    const auto chain = schreier_sims(gens);
    Point previous = -1;
    for (const auto& level : chain.levels()) {
      EXPECT_GT(level.base_point, previous);
      previous = level.base_point;
      EXPECT_TRUE(std::is_sorted(level.orbit.begin(), level.orbit.end()));
      ASSERT_EQ(level.orbit.size(), level.transversal.size());
      for (std::size_t k = 0; k < level.orbit.size(); ++k) {
        EXPECT_EQ(level.transversal[k](level.base_point), level.orbit[k]);
        // Representatives fix all earlier base points.
        for (const auto& earlier : chain.levels()) {
          if (earlier.base_point >= level.base_point) break;
          EXPECT_EQ(level.transversal[k](earlier.base_point), earlier.base_point);
        }
      }
      const auto self = level.orbit_index(level.base_point);
      ASSERT_TRUE(self.has_value());
      EXPECT_TRUE(level.transversal[*self].is_identity());
      EXPECT_LE(level.generators.size(), n * (n - 1) / 2);
    }
  }
}

TEST(StabilizerChainTest, OrderAndMembershipMatchClosureOracle) {
  Rng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(7);
    std::vector<Permutation> gens;
    const std::size_t k = rng.below(4);
    for (std::size_t i = 0; i < k; ++i) gens.push_back(rng.permutation(n));
    const auto group = testing::closure(n, gens);
    ASSERT_TRUE(group.has_value());
    const auto chain = schreier_sims(GeneratorSet(n, gens));
    EXPECT_EQ(chain.order(), group->size());
    for (int probe = 0; probe < 20; ++probe) {
      const auto p = rng.permutation(n);
      EXPECT_EQ(chain.contains(p), group->count(p) == 1);
    }
    for (const auto& g : *group) EXPECT_TRUE(chain.contains(g));
    const auto strong = chain.strong_generators();
    EXPECT_EQ(testing::closure(n, strong.gens())->size(), group->size());
  }
}

TEST(StabilizerChainTest, PrefixOrbitMatchesPointwiseStabilizer) {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < 2; ++i) gens.push_back(rng.permutation(n));
    const auto group = testing::closure(n, gens);
    const auto chain = schreier_sims(GeneratorSet(n, gens));
    for (Point x = 0; x < static_cast<Point>(n); ++x) {
      std::set<Point> expected;
      for (const auto& g : *group) {
        bool fixes_prefix = true;
        for (Point y = 0; y < x; ++y) fixes_prefix = fixes_prefix && g(y) == y;
        if (fixes_prefix) expected.insert(g(x));
      }
      const auto got = chain.prefix_orbit(x);
      EXPECT_EQ(std::set<Point>(got.begin(), got.end()), expected);
    }
  }
}

TEST(StabilizerChainTest, SiftReportsLevelsPassed) {
  const auto chain = schreier_sims(d4());
  const auto r = chain.sift(Permutation{1, 0, 2, 3});
  EXPECT_FALSE(r.member);
  EXPECT_FALSE(r.residue.is_identity());
  const auto ok = chain.sift(Permutation{3, 2, 1, 0});
  EXPECT_TRUE(ok.member);
  EXPECT_TRUE(ok.residue.is_identity());
  EXPECT_EQ(ok.levels_passed, chain.levels().size());
}

TEST(StabilizerChainTest, SimsFilterPreservesGroupAndBoundsSize) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.below(5);
    std::vector<Permutation> gens;
    for (int i = 0; i < 30; ++i) gens.push_back(rng.permutation(n));
    const auto filtered = sims_filter(n, gens);
    EXPECT_LE(filtered.size(), n * (n - 1) / 2);
    EXPECT_EQ(testing::closure(n, filtered)->size(), testing::closure(n, gens)->size());
  }
}

}  // namespace
}  // namespace psdip
