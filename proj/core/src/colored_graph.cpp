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

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "psdip/errors.hpp"

namespace psdip {

ColoredGraph::ColoredGraph(std::size_t n)
    : n_(n), words_((n + 63) / 64), rows_(n * ((n + 63) / 64), 0), colors_(n, 0) {}

ColoredGraph::ColoredGraph(std::size_t n, std::span<const Edge> edges, std::vector<Color> colors)
    : ColoredGraph(n) {
  if (!colors.empty()) {
    if (colors.size() != n) {
      throw UsageError("color vector has " + std::to_string(colors.size()) +
                       " entries for a graph on " + std::to_string(n) + " vertices");
    }
    colors_ = std::move(colors);
  }
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void ColoredGraph::check_vertex(Point v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= n_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range for n = " +
                     std::to_string(n_));
  }
}

void ColoredGraph::add_edge(Point u, Point v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) return;
  rows_[row_index(u) + word(v)] |= std::uint64_t{1} << bit(v);
  rows_[row_index(v) + word(u)] |= std::uint64_t{1} << bit(u);
  ++edge_count_;
}

void ColoredGraph::set_color(Point v, Color c) {
  check_vertex(v);
  colors_[static_cast<std::size_t>(v)] = c;
}

std::size_t ColoredGraph::degree(Point v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[row_index(v) + w]);
  return d;
}

bool ColoredGraph::is_uncolored() const noexcept {
  return std::all_of(colors_.begin(), colors_.end(), [](Color c) { return c == 0; });
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(static_cast<Point>(u), static_cast<Point>(v))) {
        out.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
      }
    }
  }
  return out;
}

ColoredGraph ColoredGraph::relabeled(const Permutation& p) const {
  if (p.degree() != n_) {
    throw UsageError("relabel: permutation degree " + std::to_string(p.degree()) +
                     " does not match graph order " + std::to_string(n_));
  }
  ColoredGraph out(n_);
  for (std::size_t u = 0; u < n_; ++u) {
    out.colors_[static_cast<std::size_t>(p[u])] = colors_[u];
    for (std::size_t v = u + 1; v < n_; ++v) {
      if (has_edge(static_cast<Point>(u), static_cast<Point>(v))) out.add_edge(p[u], p[v]);
    }
  }
  return out;
}

bool is_isomorphism(const ColoredGraph& g1, const ColoredGraph& g2, const Permutation& p) {
  if (g1.n() != g2.n() || p.degree() != g1.n()) {
    throw UsageError("is_isomorphism: degree mismatch");
  }
  if (g1.edge_count() != g2.edge_count()) return false;
  const auto n = static_cast<Point>(g1.n());
  for (Point u = 0; u < n; ++u) {
    if (g1.color(u) != g2.color(p(u))) return false;
  }
  for (Point u = 0; u < n; ++u) {
    for (Point v = u + 1; v < n; ++v) {
      if (g1.has_edge(u, v) != g2.has_edge(p(u), p(v))) return false;
    }
  }
  return true;
}

Color color_base(const ColoredGraph& g1, const ColoredGraph& g2) {
  Color top = 0;
  for (Color c : g1.colors()) top = std::max(top, c);
  for (Color c : g2.colors()) top = std::max(top, c);
  if (top == std::numeric_limits<Color>::max()) throw UsageError("color value overflow");
  return top + 1;
}

ColoredGraph individualize(const ColoredGraph& g, std::span<const Point> pinned, Color base) {
  ColoredGraph out = g;
  std::vector<bool> seen(g.n(), false);
  for (std::size_t k = 0; k < pinned.size(); ++k) {
    const Point v = pinned[k];
    if (v < 0 || static_cast<std::size_t>(v) >= g.n()) {
      throw UsageError("individualize: vertex " + std::to_string(v) + " out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw UsageError("individualize: vertex " + std::to_string(v) + " pinned twice");
    }
    seen[static_cast<std::size_t>(v)] = true;
    const Color old = g.color(v);
    if (old >= base) throw UsageError("individualize: color base too small");
    // base * (k + 1) + old, checked for overflow.
    const Color slot = static_cast<Color>(k) + 1;
    if (slot > (std::numeric_limits<Color>::max() - old) / base) {
      throw UsageError("individualize: color value overflow");
    }
    out.set_color(v, base * slot + old);
  }
  return out;
}

}  // namespace psdip
