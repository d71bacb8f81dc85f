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

#include "psdip/gni.hpp"

#include "psdip/errors.hpp"
#include "session.hpp"

namespace psdip::ip {

namespace detail {

bool defend_claims(Session& session, std::vector<Claim> claims, Rng& rng) {
  if (claims.empty()) return true;
  const std::size_t m = session.repetitions();

  // The sides are the verifier's private coins and stay in this frame.
  std::vector<bool> sides;
  sides.reserve(claims.size() * m);
  GraphBatch batch;
  batch.graphs.reserve(claims.size() * m);
  for (const auto& claim : claims) {
    for (std::size_t t = 0; t < m; ++t) {
      const bool right = rng.coin();
      const ColoredGraph& chosen = right ? claim.right : claim.left;
      batch.graphs.push_back(chosen.relabeled(rng.permutation(chosen.n())));
      sides.push_back(right);
    }
  }

  session.send(ClaimList{std::move(claims)});
  session.send(std::move(batch));
  const auto answers = session.receive<BitString>();
  if (!answers || answers->bits.size() != sides.size()) return false;
  return answers->bits == sides;
}

}  // namespace detail

bool gni_subprotocol(const ColoredGraph& ga, const ColoredGraph& gb, ProverStrategy& prover, Rng& rng,
                     std::size_t m, std::vector<Message>* log) {
  if (m < 1) throw UsageError("gni_subprotocol: m must be at least 1");
  if (ga.n() != gb.n()) throw UsageError("gni_subprotocol: graphs have different orders");
  std::vector<Message> local;
  detail::Session session(ProtocolKind::gni, m, ga, gb, prover, log ? *log : local);
  std::vector<Claim> claims{Claim{0, 0, ga, gb}};
  return detail::defend_claims(session, std::move(claims), rng);
}

}  // namespace psdip::ip
