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

#include <functional>
#include <optional>

#include "psdip/colored_graph.hpp"
#include "psdip/permutation.hpp"
#include "psdip/stabilizer_chain.hpp"

namespace psdip {

/// Canonical representative of the isomorphism coset phi * Aut(g1).
///
/// Starting from phi, walks the chain level by level and replaces the
/// current map by the product with the coset representative that sends the
/// level's base point to the smallest possible image. Because base points
/// are taken in increasing order, the result is the isomorphism g1 -> g2
/// with the lexicographically smallest image vector. It does not depend on
/// which phi or which generators of Aut(g1) were supplied.
///
/// Throws ContractViolation if phi is not an isomorphism g1 -> g2 or the
/// chain's generators are not automorphisms of g1.
Permutation find_first_isomorphism(const Permutation& phi, const StabilizerChain& chain,
                                   const ColoredGraph& g1, const ColoredGraph& g2);

/// Returns an isomorphism between two colored graphs, or nullopt.
using IsomorphismSolver =
    std::function<std::optional<Permutation>(const ColoredGraph&, const ColoredGraph&)>;

/// Solver backed by the exhaustive search in brute_force.hpp.
IsomorphismSolver brute_force_solver();

/// Generators of Aut(g) obtained only from isomorphism queries.
///
/// For alpha = 0, 1, ..., n-1 and every later point j, asks the solver for
/// an isomorphism between g with (0, ..., alpha-1, alpha) individualized and
/// g with (0, ..., alpha-1, j) individualized. Each answer is an
/// automorphism fixing 0..alpha-1 and sending alpha to j; together they
/// contain a transversal for every level of the point-stabilizer chain and
/// hence generate Aut(g). The assembled group's order is checked against the
/// product of the discovered orbit lengths.
///
/// Throws OracleIntegrityError if the solver returns a non-isomorphism or
/// its answers are mutually inconsistent.
GeneratorSet aut_generators_via_gi(const ColoredGraph& g, const IsomorphismSolver& solver);

}  // namespace psdip
