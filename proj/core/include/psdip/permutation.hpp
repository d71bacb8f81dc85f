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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace psdip {

using Point = std::int32_t;

/// A bijection on {0, ..., n-1} stored as its image vector.
///
/// Ordering is lexicographic on the image vector, so the "smallest"
/// isomorphism in a coset is the one whose images (p(0), p(1), ...) come
/// first in dictionary order.
class Permutation {
 public:
  Permutation() = default;

  /// Throws UsageError unless `images` is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t n);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator()(Point i) const { return images_[static_cast<std::size_t>(i)]; }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Points moved by this permutation, ascending.
  std::vector<Point> support() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  /// Space-separated image vector.
  std::string to_string() const;

 private:
  struct Unchecked {};
  Permutation(std::vector<Point> images, Unchecked) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);

  std::vector<Point> images_;
};

/// i -> p(q(i)). Throws UsageError on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

/// True iff `images` is a bijection on {0..images.size()-1}.
bool is_bijection(std::span<const Point> images);

}  // namespace psdip
