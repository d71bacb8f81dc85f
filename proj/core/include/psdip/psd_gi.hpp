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

#include <cstdint>
#include <vector>

#include "psdip/colored_graph.hpp"
#include "psdip/protocol.hpp"
#include "psdip/prover.hpp"
#include "psdip/rng.hpp"
#include "psdip/stabilizer_chain.hpp"

namespace psdip::ip {

/// Non-isomorphism claims that certify `chain`'s group is all of Aut(g):
/// for every point x and every later point j outside the orbit of x under
/// the claimed stabilizer of {0..x-1}, the pair (g with 0..x-1, x pinned;
/// g with 0..x-1, j pinned).
std::vector<Claim> aut_claims(const ColoredGraph& g, const StabilizerChain& chain);

/// Claims that certify phi is the lexicographically first isomorphism
/// g1 -> g2: for each stage k and each smaller candidate r' that is unused,
/// same-colored and adjacency-consistent with phi(0..k-1), the pair
/// (g1 with 0..k pinned; g2 with phi(0), ..., phi(k-1), r' pinned).
std::vector<Claim> prefix_claims(const ColoredGraph& g1, const ColoredGraph& g2,
                                 const Permutation& phi);

/// Checks that `claimed` generates Aut(g). Non-automorphisms are rejected
/// before any message is sent; otherwise every claim of aut_claims is
/// defended in one parallel GNI batch.
bool verify_aut_group(const ColoredGraph& g, const GeneratorSet& claimed, ProverStrategy& prover,
                      const ProtocolParams& params, Rng& rng, std::vector<Message>* log = nullptr);

/// Automorphism-group protocol. The prover sends generators of Aut(g1) and
/// an isomorphism phi; the verifier checks phi, verifies the group and
/// outputs the canonical isomorphism of phi's coset.
Transcript run_psd_gi_group(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                            const ProtocolParams& params, std::uint64_t seed);

/// Prefix protocol. The prover sends phi; the verifier checks it and runs
/// every stage's minimality claims in parallel, outputting phi on success.
Transcript run_psd_gi_comb(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                           const ProtocolParams& params, std::uint64_t seed);

/// Dispatches on params.protocol (group or comb).
Transcript run_protocol(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                        const ProtocolParams& params, std::uint64_t seed);

}  // namespace psdip::ip
