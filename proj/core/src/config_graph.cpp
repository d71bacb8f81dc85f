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

#include <algorithm>
#include <charconv>
#include <sstream>

#include "psdip/errors.hpp"
#include "psdip/text_format.hpp"

namespace psdip::nl {

ConfigGraph::ConfigGraph(std::vector<std::vector<Node>> successors, Node start,
                         std::span<const Node> accepting)
    : successors_(std::move(successors)), start_(start), accepting_(successors_.size(), false) {
  const auto n = static_cast<Node>(successors_.size());
  auto check = [n](Node v, const char* what) {
    if (v < 0 || v >= n) {
      throw UsageError(std::string(what) + " " + std::to_string(v) + " out of range for " +
                       std::to_string(n) + " nodes");
    }
  };
  if (n == 0) throw UsageError("configuration graph needs at least one node");
  check(start, "start node");
  for (Node v : accepting) {
    check(v, "accepting node");
    accepting_[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t v = 0; v < successors_.size(); ++v) {
    std::vector<bool> seen(successors_.size(), false);
    for (Node s : successors_[v]) {
      check(s, "successor");
      if (seen[static_cast<std::size_t>(s)]) {
        throw UsageError("node " + std::to_string(v) + " lists successor " + std::to_string(s) +
                         " twice");
      }
      seen[static_cast<std::size_t>(s)] = true;
    }
  }
}

std::vector<Node> ConfigGraph::accepting_nodes() const {
  std::vector<Node> out;
  for (std::size_t v = 0; v < accepting_.size(); ++v) {
    if (accepting_[v]) out.push_back(static_cast<Node>(v));
  }
  return out;
}

ConfigGraph build_config_graph(const ChoiceMachine& machine, std::size_t bound,
                               std::vector<Config>* labels) {
  if (machine.num_states < 1 || machine.start_state < 0 ||
      machine.start_state >= machine.num_states || machine.max_choices < 0) {
    throw UsageError("build_config_graph: malformed machine");
  }
  if (!machine.step || !machine.accepts) {
    throw UsageError("build_config_graph: machine lacks a transition or accept function");
  }
  const std::size_t positions = machine.input.size() + 1;
  const std::size_t space = static_cast<std::size_t>(machine.num_states) * positions;
  if (space > bound) {
    throw SizeError("configuration space " + std::to_string(space) + " exceeds bound " +
                    std::to_string(bound));
  }
  auto key = [positions](const Config& c) {
    return static_cast<std::size_t>(c.state) * positions + static_cast<std::size_t>(c.position);
  };

  std::vector<Node> id(space, -1);
  std::vector<Config> configs{Config{machine.start_state, 0}};
  id[key(configs[0])] = 0;
  std::vector<std::vector<Node>> successors;
  for (std::size_t head = 0; head < configs.size(); ++head) {
    const Config current = configs[head];
    std::vector<Node> out;
    for (std::int32_t choice = 0; choice < machine.max_choices; ++choice) {
      const auto next = machine.step(current, choice, machine.input);
      if (!next) continue;
      if (next->state < 0 || next->state >= machine.num_states || next->position < 0 ||
          static_cast<std::size_t>(next->position) >= positions) {
        throw UsageError("build_config_graph: transition leaves the configuration space");
      }
      Node& slot = id[key(*next)];
      if (slot < 0) {
        slot = static_cast<Node>(configs.size());
        configs.push_back(*next);
      }
      if (std::find(out.begin(), out.end(), slot) == out.end()) out.push_back(slot);
    }
    successors.push_back(std::move(out));
  }

  std::vector<Node> accepting;
  for (std::size_t v = 0; v < configs.size(); ++v) {
    if (machine.accepts(configs[v], machine.input)) accepting.push_back(static_cast<Node>(v));
  }
  if (labels) *labels = configs;
  return ConfigGraph(std::move(successors), 0, accepting);
}

ConfigGraph parse_digraph(std::string_view input) {
  text::LineReader in(input);
  if (!in.next_line()) throw ParseError(1, 1, "empty digraph file");
  const auto n = in.integer("node count", 1, 1 << 24);
  in.expect_line_end();

  std::vector<std::vector<Node>> successors(static_cast<std::size_t>(n));
  std::vector<bool> defined(static_cast<std::size_t>(n), false);
  for (long long i = 0; i < n; ++i) {
    if (!in.next_line()) in.fail("expected " + std::to_string(n) + " node lines");
    const auto head = in.token("'v:'");
    long long v = -1;
    auto [ptr, ec] = std::from_chars(head.text.data(), head.text.data() + head.text.size(), v);
    if (ec != std::errc{} || ptr + 1 != head.text.data() + head.text.size() || *ptr != ':') {
      text::LineReader::fail_at(head, "expected node label of the form 'v:'");
    }
    if (v < 0 || v >= n) text::LineReader::fail_at(head, "node " + std::to_string(v) + " out of range");
    if (defined[static_cast<std::size_t>(v)]) {
      text::LineReader::fail_at(head, "node " + std::to_string(v) + " defined twice");
    }
    defined[static_cast<std::size_t>(v)] = true;
    auto& out = successors[static_cast<std::size_t>(v)];
    while (!in.at_line_end()) {
      const auto line = in.line();
      const auto column = in.column();
      const auto s = static_cast<Node>(in.integer("successor", 0, n - 1));
      if (std::find(out.begin(), out.end(), s) != out.end()) {
        throw ParseError(line, column, "successor " + std::to_string(s) + " repeated");
      }
      out.push_back(s);
    }
  }

  std::optional<Node> start;
  std::optional<std::vector<Node>> accepting;
  while (in.next_line()) {
    const auto keyword = in.token("'start' or 'accept'");
    if (keyword.text == "start" && !start) {
      start = static_cast<Node>(in.integer("start node", 0, n - 1));
      in.expect_line_end();
    } else if (keyword.text == "accept" && !accepting) {
      accepting.emplace();
      while (!in.at_line_end()) {
        accepting->push_back(static_cast<Node>(in.integer("accepting node", 0, n - 1)));
      }
    } else {
      text::LineReader::fail_at(keyword, "unexpected '" + std::string(keyword.text) + "'");
    }
  }
  if (!start) in.fail("missing 'start' line");
  if (!accepting) in.fail("missing 'accept' line");
  return ConfigGraph(std::move(successors), *start, *accepting);
}

ConfigGraph read_digraph_file(const std::filesystem::path& path) {
  return parse_digraph(read_text_file(path));
}

std::string format_digraph(const ConfigGraph& g) {
  std::ostringstream os;
  os << g.size() << '\n';
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << v << ':';
    for (Node s : g.successors(static_cast<Node>(v))) os << ' ' << s;
    os << '\n';
  }
  os << "start " << g.start() << '\n';
  os << "accept";
  for (Node v : g.accepting_nodes()) os << ' ' << v;
  os << '\n';
  return os.str();
}

}  // namespace psdip::nl
