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

#include "psdip/protocol.hpp"

#include <algorithm>

#include "psdip/errors.hpp"

namespace psdip::ip {

std::string_view to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::group: return "group";
    case ProtocolKind::comb: return "comb";
    case ProtocolKind::aut_verification: return "aut_verification";
    case ProtocolKind::gni: return "gni";
  }
  return "unknown";
}

std::optional<ProtocolKind> parse_protocol_kind(std::string_view name) {
  for (auto k : {ProtocolKind::group, ProtocolKind::comb, ProtocolKind::aut_verification,
                 ProtocolKind::gni}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view payload_kind(const Payload& payload) {
  struct Visitor {
    std::string_view operator()(const ColoredGraph&) const { return "graph"; }
    std::string_view operator()(const Permutation&) const { return "permutation"; }
    std::string_view operator()(const GeneratorSet&) const { return "generator_set"; }
    std::string_view operator()(const ClaimList&) const { return "claim_list"; }
    std::string_view operator()(const GraphBatch&) const { return "graph_batch"; }
    std::string_view operator()(const BitString&) const { return "bits"; }
  };
  return std::visit(Visitor{}, payload);
}

std::string VerifierOutcome::to_string() const {
  return solution_ ? solution_->to_string() : std::string("BOTTOM");
}

void ProtocolParams::validate() const {
  if (m < 1) throw UsageError("protocol parameter m must be at least 1");
}

std::size_t ProverView::prover_turn() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      messages_.begin(), messages_.end(), [](const Message& msg) { return msg.sender == Sender::prover; }));
}

}  // namespace psdip::ip
