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

#include "psdip/canonical.hpp"

#include <string>
#include <vector>

#include "psdip/brute_force.hpp"
#include "psdip/errors.hpp"

namespace psdip {

Permutation find_first_isomorphism(const Permutation& phi, const StabilizerChain& chain,
                                   const ColoredGraph& g1, const ColoredGraph& g2) {
  if (g1.n() != g2.n() || phi.degree() != g1.n() || chain.degree() != g1.n()) {
    throw UsageError("find_first_isomorphism: degree mismatch");
  }
  if (!is_isomorphism(g1, g2, phi)) {
    throw ContractViolation("find_first_isomorphism: phi is not an isomorphism G1 -> G2");
  }
  if (!chain.levels().empty()) {
    for (const auto& g : chain.levels().front().generators) {
      if (!is_isomorphism(g1, g1, g)) {
        throw ContractViolation("find_first_isomorphism: chain generator is not an automorphism");
      }
    }
  }

  Permutation best = phi;
  for (const auto& level : chain.levels()) {
    // (best * u)(alpha) = best(orbit point of u); pick the smallest.
    std::size_t arg = 0;
    for (std::size_t k = 1; k < level.orbit.size(); ++k) {
      if (best(level.orbit[k]) < best(level.orbit[arg])) arg = k;
    }
    best = compose(best, level.transversal[arg]);
  }
  return best;
}

IsomorphismSolver brute_force_solver() {
  return [](const ColoredGraph& a, const ColoredGraph& b) { return brute_force_lex_first(a, b); };
}

GeneratorSet aut_generators_via_gi(const ColoredGraph& g, const IsomorphismSolver& solver) {
  const std::size_t n = g.n();
  const Color base = color_base(g, g);
  GeneratorSet gens(n);
  std::uint64_t expected_order = 1;

  std::vector<Point> pinned;
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    pinned.push_back(static_cast<Point>(alpha));
    const ColoredGraph marked_alpha = individualize(g, pinned, base);
    std::uint64_t orbit_length = 1;
    for (std::size_t j = alpha + 1; j < n; ++j) {
      pinned.back() = static_cast<Point>(j);
      const ColoredGraph marked_j = individualize(g, pinned, base);
      if (auto iso = solver(marked_alpha, marked_j)) {
        if (iso->degree() != n || !is_isomorphism(marked_alpha, marked_j, *iso)) {
          throw OracleIntegrityError("isomorphism solver returned a non-isomorphism for (" +
                                     std::to_string(alpha) + " -> " + std::to_string(j) + ")");
        }
        gens.add(std::move(*iso));
        ++orbit_length;
      }
    }
    pinned.back() = static_cast<Point>(alpha);
    expected_order *= orbit_length;
  }

  if (schreier_sims(gens).order() != expected_order) {
    throw OracleIntegrityError(
        "isomorphism solver answers are inconsistent with the generated group");
  }
  return gens;
}

}  // namespace psdip
