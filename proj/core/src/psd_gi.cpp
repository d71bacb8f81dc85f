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

#include "psdip/psd_gi.hpp"

#include <algorithm>

#include "psdip/canonical.hpp"
#include "psdip/errors.hpp"
#include "session.hpp"

namespace psdip::ip {

namespace {

bool all_automorphisms(const ColoredGraph& g, const GeneratorSet& gens) {
  return std::all_of(gens.gens().begin(), gens.gens().end(),
                     [&](const Permutation& p) { return is_isomorphism(g, g, p); });
}

bool verify_group_in_session(detail::Session& session, const ColoredGraph& g,
                             const GeneratorSet& claimed, Rng& rng) {
  if (claimed.degree() != g.n() || !all_automorphisms(g, claimed)) return false;
  const StabilizerChain chain = schreier_sims(claimed);
  return detail::defend_claims(session, aut_claims(g, chain), rng);
}

Transcript start_transcript(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                            const ProtocolParams& params, std::uint64_t seed) {
  params.validate();
  Transcript t;
  t.g1 = g1;
  t.g2 = g2;
  t.seed = seed;
  t.params = params;
  t.prover = prover.name();
  return t;
}

}  // namespace

std::vector<Claim> aut_claims(const ColoredGraph& g, const StabilizerChain& chain) {
  const std::size_t n = g.n();
  if (chain.degree() != n) throw UsageError("aut_claims: degree mismatch");
  const Color base = color_base(g, g);
  std::vector<Claim> claims;
  std::vector<Point> pinned;
  for (std::size_t x = 0; x < n; ++x) {
    const auto orbit = chain.prefix_orbit(static_cast<Point>(x));
    pinned.push_back(static_cast<Point>(x));
    const ColoredGraph marked_x = individualize(g, pinned, base);
    for (std::size_t j = x + 1; j < n; ++j) {
      if (std::binary_search(orbit.begin(), orbit.end(), static_cast<Point>(j))) continue;
      pinned.back() = static_cast<Point>(j);
      claims.push_back(Claim{static_cast<std::int32_t>(x), static_cast<std::int32_t>(j), marked_x,
                             individualize(g, pinned, base)});
    }
    pinned.back() = static_cast<Point>(x);
  }
  return claims;
}

std::vector<Claim> prefix_claims(const ColoredGraph& g1, const ColoredGraph& g2,
                                 const Permutation& phi) {
  const std::size_t n = g1.n();
  if (g2.n() != n || phi.degree() != n) throw UsageError("prefix_claims: degree mismatch");
  const Color base = color_base(g1, g2);
  std::vector<Claim> claims;
  std::vector<Point> left_pins;
  std::vector<Point> right_pins;
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const auto v = static_cast<Point>(k);
    left_pins.push_back(v);
    const ColoredGraph left = individualize(g1, left_pins, base);
    for (Point r = 0; r < phi(v); ++r) {
      if (used[static_cast<std::size_t>(r)] || g2.color(r) != g1.color(v)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < k && consistent; ++i) {
        consistent = g1.has_edge(static_cast<Point>(i), v) == g2.has_edge(phi[i], r);
      }
      if (!consistent) continue;
      right_pins.push_back(r);
      claims.push_back(Claim{static_cast<std::int32_t>(k), r, left,
                             individualize(g2, right_pins, base)});
      right_pins.pop_back();
    }
    right_pins.push_back(phi(v));
    used[static_cast<std::size_t>(phi(v))] = true;
  }
  return claims;
}

bool verify_aut_group(const ColoredGraph& g, const GeneratorSet& claimed, ProverStrategy& prover,
                      const ProtocolParams& params, Rng& rng, std::vector<Message>* log) {
  params.validate();
  if (claimed.degree() != g.n()) throw UsageError("verify_aut_group: degree mismatch");
  std::vector<Message> local;
  detail::Session session(ProtocolKind::aut_verification, params.m, g, g, prover,
                          log ? *log : local);
  return verify_group_in_session(session, g, claimed, rng);
}

Transcript run_psd_gi_group(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                            const ProtocolParams& params, std::uint64_t seed) {
  Transcript t = start_transcript(g1, g2, prover, params, seed);
  t.params.protocol = ProtocolKind::group;
  Rng rng(seed);
  detail::Session session(ProtocolKind::group, params.m, g1, g2, prover, t.messages);

  const auto gens = session.receive<GeneratorSet>();
  const auto phi = gens ? session.receive<Permutation>() : std::nullopt;
  t.prover_note = prover.note();
  if (!gens || !phi) return t;
  if (g1.n() != g2.n() || phi->degree() != g1.n() || !is_isomorphism(g1, g2, *phi)) return t;
  if (!verify_group_in_session(session, g1, *gens, rng)) return t;

  t.outcome = VerifierOutcome::output(find_first_isomorphism(*phi, schreier_sims(*gens), g1, g2));
  return t;
}

Transcript run_psd_gi_comb(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                           const ProtocolParams& params, std::uint64_t seed) {
  Transcript t = start_transcript(g1, g2, prover, params, seed);
  t.params.protocol = ProtocolKind::comb;
  Rng rng(seed);
  detail::Session session(ProtocolKind::comb, params.m, g1, g2, prover, t.messages);

  const auto phi = session.receive<Permutation>();
  t.prover_note = prover.note();
  if (!phi) return t;
  if (g1.n() != g2.n() || phi->degree() != g1.n() || !is_isomorphism(g1, g2, *phi)) return t;
  if (!detail::defend_claims(session, prefix_claims(g1, g2, *phi), rng)) return t;

  t.outcome = VerifierOutcome::output(*phi);
  return t;
}

Transcript run_protocol(const ColoredGraph& g1, const ColoredGraph& g2, ProverStrategy& prover,
                        const ProtocolParams& params, std::uint64_t seed) {
  switch (params.protocol) {
    case ProtocolKind::group: return run_psd_gi_group(g1, g2, prover, params, seed);
    case ProtocolKind::comb: return run_psd_gi_comb(g1, g2, prover, params, seed);
    default: throw UsageError("run_protocol: protocol must be group or comb");
  }
}

}  // namespace psdip::ip
