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
#include <vector>

#include "psdip/colored_graph.hpp"
#include "psdip/protocol.hpp"
#include "psdip/prover.hpp"
#include "psdip/rng.hpp"

namespace psdip::ip {

/// Graph non-isomorphism game on (ga, gb), m rounds in one batch.
///
/// Each round the verifier privately picks a side, relabels that graph by a
/// uniformly random permutation (colors travel with their vertices) and
/// sends it; the prover must name the side. Accepts iff all m answers are
/// right. When ga and gb are isomorphic the challenge distribution does not
/// depend on the side, so no prover beats 1/2 per round.
///
/// If `log` is non-null the exchanged messages are appended to it.
bool gni_subprotocol(const ColoredGraph& ga, const ColoredGraph& gb, ProverStrategy& prover, Rng& rng,
                     std::size_t m, std::vector<Message>* log = nullptr);

}  // namespace psdip::ip
