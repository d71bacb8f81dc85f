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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psdip/protocol.hpp"

namespace psdip::ip {

/// A prover: maps its view of the conversation to its next message.
/// Implementations must be deterministic given their own seed and view.
class ProverStrategy {
 public:
  virtual ~ProverStrategy() = default;

  virtual std::string name() const = 0;
  /// Free-form metadata, e.g. why a cheating strategy fell back to honest
  /// play. Empty when there is nothing to report.
  virtual std::string note() const { return {}; }

  /// Throwing is treated by the verifier as a malformed message.
  virtual Payload next_message(const ProverView& view) = 0;
};

enum class ProverKind {
  /// Brute-force answers; sends the lexicographically first isomorphism
  /// and the true automorphism group.
  honest,
  /// Sends a valid but non-canonical isomorphism and defends it.
  lex_liar,
  /// Claims the stabilizer of the first base point of Aut(G1), a proper
  /// subgroup, together with an isomorphism whose canonical form under the
  /// smaller group differs from the true one.
  subgroup_liar,
  /// Claims the trivial group and answers every challenge with a coin.
  coin_flipper,
};

inline constexpr ProverKind kAllProverKinds[] = {ProverKind::honest, ProverKind::lex_liar,
                                                 ProverKind::subgroup_liar,
                                                 ProverKind::coin_flipper};

std::string_view to_string(ProverKind kind);
std::optional<ProverKind> parse_prover_kind(std::string_view name);
/// Parses a comma-separated list such as "honest,lex_liar".
std::vector<ProverKind> parse_prover_kinds(std::string_view list);

std::unique_ptr<ProverStrategy> make_prover(ProverKind kind, std::uint64_t seed);

}  // namespace psdip::ip
