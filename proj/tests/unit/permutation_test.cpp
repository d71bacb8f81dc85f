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

#include "psdip/permutation.hpp"

#include <gtest/gtest.h>

#include "psdip/errors.hpp"
#include "psdip/rng.hpp"

namespace psdip {
namespace {

TEST(PermutationTest, ComposeWithIdentity) {
  const Permutation p{2, 0, 3, 1};
  EXPECT_EQ(compose(p, Permutation::identity(4)), p);
  EXPECT_EQ(compose(Permutation::identity(4), p), p);
}

TEST(PermutationTest, InverseOfThreeCycle) {
  EXPECT_EQ(inverse(Permutation{1, 2, 0}), (Permutation{2, 0, 1}));
}

TEST(PermutationTest, ComposeAppliesRightFactorFirst) {
  const Permutation p{1, 2, 0};
  const Permutation q{0, 2, 1};
  // i -> p(q(i)): 0 -> p(0) = 1, 1 -> p(2) = 0, 2 -> p(1) = 2.
  EXPECT_EQ(compose(p, q), (Permutation{1, 0, 2}));
}

TEST(PermutationTest, RejectsNonBijections) {
  EXPECT_THROW(Permutation({0, 0, 1}), UsageError);
  EXPECT_THROW(Permutation({0, 3, 1}), UsageError);
  EXPECT_THROW(Permutation({-1, 0}), UsageError);
}

TEST(PermutationTest, DegreeMismatchIsUsageError) {
  EXPECT_THROW(compose(Permutation::identity(3), Permutation::identity(4)), UsageError);
}

TEST(PermutationTest, OrderIsLexicographicOnImages) {
  EXPECT_LT((Permutation{0, 2, 1, 3}), (Permutation{1, 0, 2, 3}));
  EXPECT_LT((Permutation{0, 2, 1, 3}), (Permutation{0, 2, 3, 1}));
}

TEST(PermutationTest, DegenerateDegrees) {
  EXPECT_TRUE(Permutation::identity(0).is_identity());
  EXPECT_EQ(Permutation::identity(1).to_string(), "0");
  EXPECT_EQ(Permutation::identity(0).to_string(), "");
}

TEST(PermutationTest, Support) {
  EXPECT_EQ((Permutation{0, 2, 1, 3}).support(), (std::vector<Point>{1, 2}));
}

TEST(PermutationTest, GroupAxiomsOnRandomPermutations) {
  Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = rng.below(12);
    const auto p = rng.permutation(n);
    const auto q = rng.permutation(n);
    const auto r = rng.permutation(n);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
    EXPECT_EQ(compose(compose(p, q), r), compose(p, compose(q, r)));
    EXPECT_EQ(inverse(compose(p, q)), compose(inverse(q), inverse(p)));
  }
}

}  // namespace
}  // namespace psdip
