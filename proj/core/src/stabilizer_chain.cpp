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

#include <algorithm>
#include <string>

#include "psdip/errors.hpp"

namespace psdip {

namespace {

std::optional<Point> first_moved_point(const Permutation& p) {
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (p[i] != static_cast<Point>(i)) return static_cast<Point>(i);
  }
  return std::nullopt;
}

}  // namespace

GeneratorSet::GeneratorSet(std::size_t n, std::vector<Permutation> gens) : n_(n) {
  for (auto& g : gens) add(std::move(g));
}

void GeneratorSet::add(Permutation p) {
  if (p.degree() != n_) {
    throw UsageError("generator of degree " + std::to_string(p.degree()) +
                     " in a generator set of degree " + std::to_string(n_));
  }
  gens_.push_back(std::move(p));
}

std::optional<std::size_t> StabilizerChain::Level::orbit_index(Point point) const {
  auto it = std::lower_bound(orbit.begin(), orbit.end(), point);
  if (it == orbit.end() || *it != point) return std::nullopt;
  return static_cast<std::size_t>(it - orbit.begin());
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> out;
  out.reserve(levels_.size());
  for (const auto& level : levels_) out.push_back(level.base_point);
  return out;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t order = 1;
  for (const auto& level : levels_) {
    if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(level.orbit.size()), &order)) {
      throw SizeError("group order does not fit in 64 bits");
    }
  }
  return order;
}

StabilizerChain::SiftResult StabilizerChain::sift(const Permutation& p) const {
  if (p.degree() != n_) throw UsageError("sift: degree mismatch");
  SiftResult result{p, 0, false};
  for (const auto& level : levels_) {
    const Point image = result.residue(level.base_point);
    const auto k = level.orbit_index(image);
    if (!k) return result;
    result.residue = compose(inverse(level.transversal[*k]), result.residue);
    ++result.levels_passed;
  }
  result.member = result.residue.is_identity();
  return result;
}

std::vector<Point> StabilizerChain::prefix_orbit(Point x) const {
  if (x < 0 || static_cast<std::size_t>(x) >= n_) throw UsageError("prefix_orbit: point out of range");
  const auto level = level_of_point_[static_cast<std::size_t>(x)];
  if (level < 0) return {x};
  return levels_[static_cast<std::size_t>(level)].orbit;
}

GeneratorSet StabilizerChain::strong_generators() const {
  GeneratorSet out(n_);
  std::vector<Permutation> seen;
  for (const auto& level : levels_) {
    for (const auto& g : level.generators) {
      if (std::find(seen.begin(), seen.end(), g) == seen.end()) {
        seen.push_back(g);
        out.add(g);
      }
    }
  }
  return out;
}

std::vector<Permutation> sims_filter(std::size_t n, std::span<const Permutation> gens) {
  // table[i * n + j] holds the kept element whose first moved point is i
  // and which sends i to j.
  std::vector<std::optional<Permutation>> table(n * n);
  std::vector<Permutation> kept;
  for (const auto& g : gens) {
    Permutation s = g;
    while (true) {
      const auto i = first_moved_point(s);
      if (!i) break;
      const auto slot = static_cast<std::size_t>(*i) * n + static_cast<std::size_t>(s(*i));
      if (!table[slot]) {
        table[slot] = s;
        kept.push_back(s);
        break;
      }
      s = compose(inverse(*table[slot]), s);
    }
  }
  return kept;
}

StabilizerChain schreier_sims(const GeneratorSet& gens) {
  const std::size_t n = gens.degree();
  StabilizerChain chain;
  chain.n_ = n;
  chain.level_of_point_.assign(n, -1);

  std::vector<Permutation> current = sims_filter(n, gens.gens());
  while (!current.empty()) {
    StabilizerChain::Level level;
    Point alpha = static_cast<Point>(n);
    for (const auto& g : current) alpha = std::min(alpha, *first_moved_point(g));
    level.base_point = alpha;
    level.generators = current;

    // Breadth-first orbit with a transversal element per discovered point.
    std::vector<std::optional<Permutation>> rep(n);
    std::vector<Point> discovered{alpha};
    rep[static_cast<std::size_t>(alpha)] = Permutation::identity(n);
    for (std::size_t head = 0; head < discovered.size(); ++head) {
      const Point beta = discovered[head];
      for (const auto& g : current) {
        const Point gamma = g(beta);
        if (!rep[static_cast<std::size_t>(gamma)]) {
          rep[static_cast<std::size_t>(gamma)] = compose(g, *rep[static_cast<std::size_t>(beta)]);
          discovered.push_back(gamma);
        }
      }
    }

    // Schreier generators u_{g(beta)}^{-1} g u_beta of the stabilizer of alpha.
    std::vector<Permutation> schreier;
    for (Point beta : discovered) {
      const auto& u_beta = *rep[static_cast<std::size_t>(beta)];
      for (const auto& g : current) {
        const auto& u_gb = *rep[static_cast<std::size_t>(g(beta))];
        Permutation s = compose(inverse(u_gb), compose(g, u_beta));
        if (!s.is_identity()) schreier.push_back(std::move(s));
      }
    }

    std::sort(discovered.begin(), discovered.end());
    for (Point beta : discovered) {
      level.orbit.push_back(beta);
      level.transversal.push_back(std::move(*rep[static_cast<std::size_t>(beta)]));
    }
    chain.level_of_point_[static_cast<std::size_t>(alpha)] =
        static_cast<std::int32_t>(chain.levels_.size());
    chain.levels_.push_back(std::move(level));
    current = sims_filter(n, schreier);
  }
  return chain;
}

}  // namespace psdip
