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

#include "psdip/config_graph.hpp"

#include <gtest/gtest.h>

#include "psdip/errors.hpp"
#include "psdip/lex_path.hpp"
#include "psdip/rng.hpp"
#include "support/generators.hpp"

namespace psdip::nl {
namespace {

// Two states: 0 = no '1' seen yet, 1 = seen. Choice 0 reads a symbol and
// keeps the state; choice 1 reads a '1' and moves to state 1.
ChoiceMachine contains_one(std::string input) {
  ChoiceMachine m;
  m.num_states = 2;
  m.input = std::move(input);
  m.max_choices = 2;
  m.step = [](const Config& c, std::int32_t choice, std::string_view in) -> std::optional<Config> {
    if (static_cast<std::size_t>(c.position) >= in.size()) return std::nullopt;
    if (choice == 0) return Config{c.state, c.position + 1};
    if (in[static_cast<std::size_t>(c.position)] == '1') return Config{1, c.position + 1};
    return std::nullopt;
  };
  m.accepts = [](const Config& c, std::string_view in) {
    return c.state == 1 && static_cast<std::size_t>(c.position) == in.size();
  };
  return m;
}

TEST(ConfigGraphTest, NfaContainingOne) {
  std::vector<Config> labels;
  const auto g = build_config_graph(contains_one("01"), kDefaultConfigBound, &labels);
  EXPECT_EQ(labels.front(), (Config{0, 0}));
  EXPECT_EQ(shortest_accepting_length(g, g.start()), 2u);
  const auto path = lex_first_shortest_path(g);
  ASSERT_TRUE(path.has_value());
  EXPECT_EQ(labels[static_cast<std::size_t>(path->back())], (Config{1, 2}));
  EXPECT_FALSE(lex_first_shortest_path(build_config_graph(contains_one("000"))).has_value());
}

TEST(ConfigGraphTest, DeterministicMachineHasAtMostOneSuccessor) {
  ChoiceMachine m;
  m.num_states = 3;
  m.input = "abcd";
  m.max_choices = 1;
  m.step = [](const Config& c, std::int32_t, std::string_view in) -> std::optional<Config> {
    if (static_cast<std::size_t>(c.position) >= in.size()) return std::nullopt;
    return Config{(c.state + 1) % 3, c.position + 1};
  };
  m.accepts = [](const Config&, std::string_view) { return false; };
  const auto g = build_config_graph(m);
  for (Node v = 0; v < static_cast<Node>(g.size()); ++v) EXPECT_LE(g.successors(v).size(), 1u);
  EXPECT_EQ(g.size(), 5u);
}

TEST(ConfigGraphTest, TwoChoiceMachineStaysWithinPositionRange) {
  ChoiceMachine m;
  m.num_states = 4;
  m.input = "xyz";
  m.max_choices = 2;
  m.step = [](const Config& c, std::int32_t choice, std::string_view in) -> std::optional<Config> {
    if (static_cast<std::size_t>(c.position) >= in.size()) return std::nullopt;
    return Config{(c.state + 1 + choice) % 4, c.position + 1};
  };
  m.accepts = [](const Config& c, std::string_view) { return c.state == 3; };
  const auto g = build_config_graph(m);
  EXPECT_LE(g.size(), 4u * 4u);
  EXPECT_THROW(build_config_graph(m, 15), SizeError);
}

TEST(ConfigGraphTest, DuplicateChoicesCollapseInFirstOrder) {
  ChoiceMachine m;
  m.num_states = 2;
  m.input = "a";
  m.max_choices = 3;
  m.step = [](const Config& c, std::int32_t choice, std::string_view) -> std::optional<Config> {
    if (c.position > 0) return std::nullopt;
    return Config{choice == 1 ? 0 : 1, 1};
  };
  m.accepts = [](const Config&, std::string_view) { return false; };
  const auto g = build_config_graph(m);
  ASSERT_EQ(g.successors(0).size(), 2u);
  EXPECT_EQ(g.successors(0)[0], 1);
  EXPECT_EQ(g.successors(0)[1], 2);
}

TEST(ConfigGraphTest, MalformedMachines) {
  auto m = contains_one("1");
  m.start_state = 2;
  EXPECT_THROW(build_config_graph(m), UsageError);
  auto escape = contains_one("1");
  escape.step = [](const Config& c, std::int32_t, std::string_view) -> std::optional<Config> {
    return Config{c.state, c.position + 5};
  };
  EXPECT_THROW(build_config_graph(escape), UsageError);
}

TEST(ConfigGraphTest, ValidatesSuccessorLists) {
  const std::vector<Node> none;
  EXPECT_THROW(ConfigGraph({{1, 1}, {}}, 0, none), UsageError);
  EXPECT_THROW(ConfigGraph({{2}, {}}, 0, none), UsageError);
  EXPECT_THROW(ConfigGraph({}, 0, none), UsageError);
  EXPECT_THROW(ConfigGraph({{}}, 1, none), UsageError);
}

TEST(ConfigGraphTest, OrderIsPartOfTheValue) {
  const std::vector<Node> acc{3};
  const ConfigGraph a({{1, 2}, {3}, {3}, {}}, 0, acc);
  const ConfigGraph b({{2, 1}, {3}, {3}, {}}, 0, acc);
  EXPECT_FALSE(a == b);
}

TEST(ConfigGraphTest, ParseFormatRoundTrip) {
  const auto g = parse_digraph("4\n0: 1 2\n1: 3\n2: 3\n3:\nstart 0\naccept 3\n");
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.successors(0)[1], 2);
  EXPECT_TRUE(g.is_accepting(3));
  EXPECT_EQ(parse_digraph(format_digraph(g)), g);
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = testing::random_digraph(rng, 12);
    EXPECT_EQ(parse_digraph(format_digraph(r)), r);
  }
}

TEST(ConfigGraphTest, ParseErrorsCarryPositions) {
  auto position = [](std::string_view text) {
    try {
      parse_digraph(text);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  EXPECT_EQ(position("2\n0: 1 1\n1:\nstart 0\naccept\n"), (std::pair<std::size_t, std::size_t>{2, 6}));
  EXPECT_EQ(position("2\n0 1\n1:\nstart 0\naccept\n"), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(position("2\n0: 5\n1:\nstart 0\naccept\n"), (std::pair<std::size_t, std::size_t>{2, 4}));
  EXPECT_EQ(position("2\n0:\n1:\nbegin 0\n"), (std::pair<std::size_t, std::size_t>{4, 1}));
  EXPECT_EQ(position("2\n0:\n0:\n"), (std::pair<std::size_t, std::size_t>{3, 1}));
  EXPECT_NE(position("2\n0:\n1:\nstart 0\n").first, 0u);
}

}  // namespace
}  // namespace psdip::nl
