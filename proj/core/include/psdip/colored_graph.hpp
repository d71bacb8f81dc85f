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
#include <span>
#include <utility>
#include <vector>

#include "psdip/permutation.hpp"

namespace psdip {

using Color = std::uint64_t;
using Edge = std::pair<Point, Point>;

/// Simple undirected graph with a color on every vertex.
///
/// Colors carry individualization: isomorphisms between colored graphs
/// must map every vertex onto a vertex of the same color. An all-zero
/// coloring is an ordinary uncolored graph.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  explicit ColoredGraph(std::size_t n);
  /// Throws UsageError on self-loops, out-of-range endpoints or a color
  /// vector of the wrong length. Repeated edges collapse.
  ColoredGraph(std::size_t n, std::span<const Edge> edges, std::vector<Color> colors = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(Point u, Point v) const {
    return (rows_[row_index(u) + word(v)] >> bit(v)) & 1u;
  }
  std::size_t degree(Point v) const;
  Color color(Point v) const { return colors_[static_cast<std::size_t>(v)]; }
  std::span<const Color> colors() const noexcept { return colors_; }
  bool is_uncolored() const noexcept;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  void add_edge(Point u, Point v);
  void set_color(Point v, Color c);

  /// Relabels vertex v as p(v); colors travel with their vertex.
  ColoredGraph relabeled(const Permutation& p) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::size_t row_index(Point u) const { return static_cast<std::size_t>(u) * words_; }
  static std::size_t word(Point v) { return static_cast<std::size_t>(v) >> 6; }
  static unsigned bit(Point v) { return static_cast<unsigned>(v) & 63u; }
  void check_vertex(Point v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<Color> colors_;
};

/// True iff p maps g1 onto g2: edges and non-edges are preserved in both
/// directions and color(v) == color(p(v)). Throws UsageError when the
/// degrees of g1, g2 and p disagree.
bool is_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2, const Permutation& p);

/// One more than the largest color used by either graph. Individualizing
/// two graphs with a shared base keeps their new colors comparable.
Color color_base(const ColoredGraph& g1, const ColoredGraph& g2);

/// Gives pinned[k] a fresh color that encodes both its position k and its
/// original color; every other vertex keeps its color. Isomorphisms between
/// two graphs individualized with the same base must therefore map
/// pinned_a[k] to pinned_b[k] for every k.
ColoredGraph individualize(const ColoredGraph& g, std::span<const Point> pinned, Color base);

}  // namespace psdip
