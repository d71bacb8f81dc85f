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

#include "psdip/lex_path.hpp"

#include <string>

#include "psdip/errors.hpp"

namespace psdip::nl {

std::vector<std::optional<std::size_t>> accepting_distances(const ConfigGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Node>> predecessors(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (Node s : g.successors(static_cast<Node>(v))) {
      predecessors[static_cast<std::size_t>(s)].push_back(static_cast<Node>(v));
    }
  }
  std::vector<std::optional<std::size_t>> dist(n);
  std::vector<Node> queue;
  for (Node v : g.accepting_nodes()) {
    dist[static_cast<std::size_t>(v)] = 0;
    queue.push_back(v);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node v = queue[head];
    const std::size_t d = *dist[static_cast<std::size_t>(v)];
    for (Node p : predecessors[static_cast<std::size_t>(v)]) {
      if (!dist[static_cast<std::size_t>(p)]) {
        dist[static_cast<std::size_t>(p)] = d + 1;
        queue.push_back(p);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> shortest_accepting_length(const ConfigGraph& g, Node v) {
  if (v < 0 || static_cast<std::size_t>(v) >= g.size()) {
    throw UsageError("shortest_accepting_length: node " + std::to_string(v) + " out of range");
  }
  return accepting_distances(g)[static_cast<std::size_t>(v)];
}

std::optional<Path> lex_first_shortest_path(const ConfigGraph& g) {
  const auto dist = accepting_distances(g);
  auto remaining = dist[static_cast<std::size_t>(g.start())];
  if (!remaining) return std::nullopt;

  Path path{g.start()};
  for (std::size_t t = *remaining; t > 0; --t) {
    const Node current = path.back();
    for (Node s : g.successors(current)) {
      const auto& d = dist[static_cast<std::size_t>(s)];
      if (d && *d == t - 1) {
        path.push_back(s);
        break;
      }
    }
  }
  return path;
}

namespace {

class WalkEnumerator {
 public:
  WalkEnumerator(const ConfigGraph& g, std::size_t bound) : g_(g), bound_(bound) {}

  // Smallest choice sequence among accepting walks of exactly `length`
  // steps, if any. Every such walk is visited; only subtrees already known
  // to contain no accepting walk of the remaining length are skipped.
  std::optional<std::vector<std::size_t>> best_of_length(std::size_t length) {
    best_.reset();
    choices_.clear();
    dead_.assign((length + 1) * g_.size(), false);
    walk(g_.start(), length);
    return best_;
  }

 private:
  bool walk(Node v, std::size_t left) {
    const std::size_t key = left * g_.size() + static_cast<std::size_t>(v);
    if (dead_[key]) return false;
    if (++steps_ > bound_) {
      throw SizeError("path enumeration exceeded " + std::to_string(bound_) + " steps");
    }
    bool found = false;
    if (left == 0) {
      found = g_.is_accepting(v);
      if (found && (!best_ || choices_ < *best_)) best_ = choices_;
    } else {
      const auto succ = g_.successors(v);
      for (std::size_t i = 0; i < succ.size(); ++i) {
        choices_.push_back(i);
        found = walk(succ[i], left - 1) || found;
        choices_.pop_back();
      }
    }
    if (!found) dead_[key] = true;
    return found;
  }

  const ConfigGraph& g_;
  std::size_t bound_;
  std::size_t steps_ = 0;
  std::vector<std::size_t> choices_;
  std::vector<bool> dead_;
  std::optional<std::vector<std::size_t>> best_;
};

}  // namespace

std::optional<Path> brute_force_lex_first(const ConfigGraph& g, std::size_t bound) {
  WalkEnumerator enumerator(g, bound);
  // A shortest accepting walk never repeats a node, so n - 1 steps suffice.
  for (std::size_t length = 0; length < g.size(); ++length) {
    if (auto best = enumerator.best_of_length(length)) {
      Path path{g.start()};
      for (std::size_t choice : *best) path.push_back(g.successors(path.back())[choice]);
      return path;
    }
  }
  return std::nullopt;
}

}  // namespace psdip::nl
