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

#include "psdip/brute_force.hpp"

#include <string>

#include "psdip/errors.hpp"

namespace psdip {

namespace {

class Search {
 public:
  Search(const ColoredGraph& g1, const ColoredGraph& g2,
         const std::function<bool(const Permutation&)>& visit)
      : g1_(g1), g2_(g2), visit_(visit), n_(g1.n()), image_(n_), used_(n_, false),
        deg1_(n_), deg2_(n_) {
    for (std::size_t v = 0; v < n_; ++v) {
      deg1_[v] = g1.degree(static_cast<Point>(v));
      deg2_[v] = g2.degree(static_cast<Point>(v));
    }
  }

  void run() {
    if (g1_.edge_count() != g2_.edge_count()) return;
    extend(0);
  }

 private:
  bool consistent(std::size_t v, Point t) const {
    const auto tv = static_cast<std::size_t>(t);
    if (g1_.color(static_cast<Point>(v)) != g2_.color(t)) return false;
    if (deg1_[v] != deg2_[tv]) return false;
    for (std::size_t u = 0; u < v; ++u) {
      if (g1_.has_edge(static_cast<Point>(u), static_cast<Point>(v)) !=
          g2_.has_edge(image_[u], t)) {
        return false;
      }
    }
    return true;
  }

  // Returns false once the visitor asks to stop.
  bool extend(std::size_t v) {
    if (v == n_) return visit_(Permutation(image_));
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t] || !consistent(v, static_cast<Point>(t))) continue;
      used_[t] = true;
      image_[v] = static_cast<Point>(t);
      const bool go_on = extend(v + 1);
      used_[t] = false;
      if (!go_on) return false;
    }
    return true;
  }

  const ColoredGraph& g1_;
  const ColoredGraph& g2_;
  const std::function<bool(const Permutation&)>& visit_;
  std::size_t n_;
  std::vector<Point> image_;
  std::vector<bool> used_;
  std::vector<std::size_t> deg1_;
  std::vector<std::size_t> deg2_;
};

}  // namespace

void for_each_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2,
                          const std::function<bool(const Permutation&)>& visit) {
  if (g1.n() != g2.n()) throw UsageError("brute force: graphs have different orders");
  if (g1.n() > kBruteForceMaxVertices) {
    throw SizeError("brute force refuses n = " + std::to_string(g1.n()) + " (limit " +
                    std::to_string(kBruteForceMaxVertices) + ")");
  }
  Search(g1, g2, visit).run();
}

std::optional<Permutation> brute_force_lex_first(const ColoredGraph& g1, const ColoredGraph& g2) {
  std::optional<Permutation> first;
  for_each_isomorphism(g1, g2, [&](const Permutation& p) {
    first = p;
    return false;
  });
  return first;
}

std::vector<Permutation> brute_force_isomorphisms(const ColoredGraph& g1, const ColoredGraph& g2) {
  std::vector<Permutation> all;
  for_each_isomorphism(g1, g2, [&](const Permutation& p) {
    all.push_back(p);
    return true;
  });
  return all;
}

bool brute_force_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2) {
  return brute_force_lex_first(g1, g2).has_value();
}

BruteForceResult brute_force_oracles(const ColoredGraph& g1, const ColoredGraph& g2) {
  BruteForceResult result;
  result.isomorphisms = brute_force_isomorphisms(g1, g2);
  result.automorphisms = brute_force_isomorphisms(g1, g1);
  if (!result.isomorphisms.empty()) result.lex_first = result.isomorphisms.front();
  return result;
}

}  // namespace psdip
