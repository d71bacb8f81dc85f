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
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psdip::nl {

using Node = std::int32_t;

/// Explicit configuration graph of a nondeterministic machine. The order
/// of each successor list is the machine's choice order and is part of the
/// value: the same edges in a different order form a different input.
class ConfigGraph {
 public:
  ConfigGraph() = default;
  /// Throws UsageError on out-of-range nodes or a repeated successor.
  ConfigGraph(std::vector<std::vector<Node>> successors, Node start, std::span<const Node> accepting);

  std::size_t size() const noexcept { return successors_.size(); }
  std::span<const Node> successors(Node v) const {
    return successors_[static_cast<std::size_t>(v)];
  }
  Node start() const noexcept { return start_; }
  bool is_accepting(Node v) const { return accepting_[static_cast<std::size_t>(v)]; }
  std::vector<Node> accepting_nodes() const;

  friend bool operator==(const ConfigGraph&, const ConfigGraph&) = default;

 private:
  std::vector<std::vector<Node>> successors_;
  Node start_ = 0;
  std::vector<bool> accepting_;
};

/// A configuration of a choice machine: control state and head position.
struct Config {
  std::int32_t state = 0;
  std::int32_t position = 0;
  friend bool operator==(const Config&, const Config&) = default;
};

/// Toy nondeterministic machine with a read-only input head. Positions run
/// over 0..input.size(), so the configuration space has
/// num_states * (input.size() + 1) elements.
struct ChoiceMachine {
  std::int32_t num_states = 1;
  std::int32_t start_state = 0;
  std::string input;
  /// Choice indices tried are 0..max_choices-1.
  std::int32_t max_choices = 1;
  /// Successor of `config` under `choice`, or nullopt if that choice is not
  /// available there.
  std::function<std::optional<Config>(const Config& config, std::int32_t choice,
                                      std::string_view input)>
      step;
  std::function<bool(const Config& config, std::string_view input)> accepts;
};

inline constexpr std::size_t kDefaultConfigBound = 1'000'000;

/// Expands the configurations reachable from (start_state, 0) breadth-first.
/// Node 0 is the start; successors follow choice order, with a choice that
/// repeats an earlier choice's configuration dropped. If `labels` is given
/// it receives the configuration of every node.
///
/// Throws SizeError when the configuration space exceeds `bound`, and
/// UsageError when a transition leaves the configuration space.
ConfigGraph build_config_graph(const ChoiceMachine& machine, std::size_t bound = kDefaultConfigBound,
                               std::vector<Config>* labels = nullptr);

// Digraph text format:
//
//   n
//   v: s1 s2 ... sk      (one line per node, successors in choice order)
//   start v
//   accept v1 v2 ...
ConfigGraph parse_digraph(std::string_view text);
ConfigGraph read_digraph_file(const std::filesystem::path& path);
std::string format_digraph(const ConfigGraph& g);

}  // namespace psdip::nl
