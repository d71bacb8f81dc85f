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
#include <optional>
#include <span>
#include <vector>

#include "psdip/permutation.hpp"

namespace psdip {

/// Generators of a permutation group of degree n.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t n) : n_(n) {}
  /// Throws UsageError if some generator has the wrong degree.
  GeneratorSet(std::size_t n, std::vector<Permutation> gens);

  std::size_t degree() const noexcept { return n_; }
  std::span<const Permutation> gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool empty() const noexcept { return gens_.empty(); }

  void add(Permutation p);

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> gens_;
};

/// Base and strong generating set for a permutation group H.
///
/// Level i holds the base point alpha_i, the orbit of alpha_i under
/// H_i = Stab_H(alpha_1, ..., alpha_{i-1}), one coset representative of
/// H_{i+1} in H_i per orbit point, and generators of H_i. Base points are
/// strictly increasing: alpha_i is the smallest point moved by H_i.
class StabilizerChain {
 public:
  struct Level {
    Point base_point = 0;
    /// Orbit of base_point under this level's group, ascending.
    std::vector<Point> orbit;
    /// transversal[k] maps base_point to orbit[k]. The representative for
    /// base_point itself is the identity.
    std::vector<Permutation> transversal;
    std::vector<Permutation> generators;

    /// Index of `point` in `orbit`, if present.
    std::optional<std::size_t> orbit_index(Point point) const;
  };

  struct SiftResult {
    Permutation residue;
    /// Number of levels passed before sifting stopped.
    std::size_t levels_passed = 0;
    bool member = false;
  };

  StabilizerChain() = default;

  std::size_t degree() const noexcept { return n_; }
  std::span<const Level> levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  /// Product of orbit lengths. Throws SizeError if it exceeds 64 bits.
  std::uint64_t order() const;

  SiftResult sift(const Permutation& p) const;
  bool contains(const Permutation& p) const { return sift(p).member; }

  /// Orbit of x under the pointwise stabilizer of {0, ..., x-1}.
  std::vector<Point> prefix_orbit(Point x) const;

  /// All strong generators, level by level (duplicates removed).
  GeneratorSet strong_generators() const;

 private:
  friend StabilizerChain schreier_sims(const GeneratorSet& gens);

  std::size_t n_ = 0;
  std::vector<Level> levels_;
  std::vector<std::int32_t> level_of_point_;  // -1 if not a base point
};

/// Deterministic Schreier-Sims. Each level's generators are the Schreier
/// generators of the level above, reduced with a Sims filter so that at
/// most n(n-1)/2 survive. The identity group yields an empty base.
StabilizerChain schreier_sims(const GeneratorSet& gens);

/// Reduces `gens` to an equivalent generating set in which no two elements
/// share the same (first moved point, image) pair.
std::vector<Permutation> sims_filter(std::size_t n, std::span<const Permutation> gens);

}  // namespace psdip
