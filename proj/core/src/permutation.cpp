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

#include "psdip/permutation.hpp"

#include <sstream>
#include <utility>

#include "psdip/errors.hpp"

namespace psdip {

bool is_bijection(std::span<const Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point x : images) {
    if (x < 0 || static_cast<std::size_t>(x) >= images.size()) return false;
    if (seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = true;
  }
  return true;
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (!is_bijection(images_)) {
    throw UsageError("image vector is not a bijection on {0..n-1}");
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images)) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Point>(i);
  return Permutation(std::move(images), Unchecked{});
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Point>(i)) return false;
  }
  return true;
}

std::vector<Point> Permutation::support() const {
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<Point>(i)) moved.push_back(static_cast<Point>(i));
  }
  return moved;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) os << ' ';
    os << images_[i];
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw UsageError("compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                     std::to_string(q.degree()) + ")");
  }
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q[i]);
  return Permutation(std::move(images), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) {
    images[static_cast<std::size_t>(p[i])] = static_cast<Point>(i);
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

}  // namespace psdip
