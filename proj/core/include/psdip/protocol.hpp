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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "psdip/colored_graph.hpp"
#include "psdip/permutation.hpp"
#include "psdip/stabilizer_chain.hpp"

namespace psdip::ip {

enum class Sender { prover, verifier };

enum class ProtocolKind {
  /// Aut(G1) generators + isomorphism, canonicalized by the verifier.
  group,
  /// Prover sends the canonical isomorphism and defends every prefix.
  comb,
  /// Stand-alone check of a claimed automorphism group.
  aut_verification,
  /// Stand-alone graph non-isomorphism game.
  gni,
};

std::string_view to_string(ProtocolKind kind);
std::optional<ProtocolKind> parse_protocol_kind(std::string_view name);

/// One non-isomorphism claim: "left and right are not isomorphic". `stage`
/// and `target` record which question the pair encodes.
struct Claim {
  std::int32_t stage = 0;
  std::int32_t target = 0;
  ColoredGraph left;
  ColoredGraph right;

  friend bool operator==(const Claim&, const Claim&) = default;
};

struct ClaimList {
  std::vector<Claim> claims;
  friend bool operator==(const ClaimList&, const ClaimList&) = default;
};

/// Challenge graphs, claim-major: graphs[c * m + t] is round t of claim c.
struct GraphBatch {
  std::vector<ColoredGraph> graphs;
  friend bool operator==(const GraphBatch&, const GraphBatch&) = default;
};

/// Prover answers aligned with a GraphBatch: false = left, true = right.
struct BitString {
  std::vector<bool> bits;
  friend bool operator==(const BitString&, const BitString&) = default;
};

using Payload = std::variant<ColoredGraph, Permutation, GeneratorSet, ClaimList, GraphBatch, BitString>;

std::string_view payload_kind(const Payload& payload);

struct Message {
  Sender sender = Sender::prover;
  std::size_t round = 0;
  Payload payload;

  friend bool operator==(const Message&, const Message&) = default;
};

/// Either the verifier's output s(x) or bottom.
class VerifierOutcome {
 public:
  static VerifierOutcome bottom() { return VerifierOutcome{}; }
  static VerifierOutcome output(Permutation s) { return VerifierOutcome{std::move(s)}; }

  bool is_bottom() const noexcept { return !solution_.has_value(); }
  const std::optional<Permutation>& solution() const noexcept { return solution_; }
  /// "BOTTOM" or the image vector.
  std::string to_string() const;

  friend bool operator==(const VerifierOutcome&, const VerifierOutcome&) = default;

 private:
  VerifierOutcome() = default;
  explicit VerifierOutcome(Permutation s) : solution_(std::move(s)) {}

  std::optional<Permutation> solution_;
};

struct ProtocolParams {
  /// GNI rounds per claim.
  std::size_t m = 20;
  ProtocolKind protocol = ProtocolKind::group;

  /// Throws UsageError when m < 1.
  void validate() const;

  friend bool operator==(const ProtocolParams&, const ProtocolParams&) = default;
};

struct Transcript {
  ColoredGraph g1;
  ColoredGraph g2;
  std::uint64_t seed = 0;
  ProtocolParams params;
  std::string prover;
  std::string prover_note;
  std::vector<Message> messages;
  VerifierOutcome outcome = VerifierOutcome::bottom();

  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// Everything a prover is allowed to see: the public input, the public
/// parameters and the messages exchanged so far. The verifier's coins are
/// not reachable from here.
class ProverView {
 public:
  ProverView(ProtocolKind protocol, std::size_t m, const ColoredGraph& g1, const ColoredGraph& g2,
             std::span<const Message> messages)
      : protocol_(protocol), m_(m), g1_(&g1), g2_(&g2), messages_(messages) {}

  ProtocolKind protocol() const noexcept { return protocol_; }
  std::size_t repetitions() const noexcept { return m_; }
  const ColoredGraph& g1() const noexcept { return *g1_; }
  const ColoredGraph& g2() const noexcept { return *g2_; }
  std::span<const Message> messages() const noexcept { return messages_; }

  /// Number of messages the prover has already sent.
  std::size_t prover_turn() const noexcept;

  /// Most recent payload of type T, or nullptr.
  template <class T>
  const T* last() const noexcept {
    for (auto it = messages_.rbegin(); it != messages_.rend(); ++it) {
      if (const auto* p = std::get_if<T>(&it->payload)) return p;
    }
    return nullptr;
  }

 private:
  ProtocolKind protocol_;
  std::size_t m_;
  const ColoredGraph* g1_;
  const ColoredGraph* g2_;
  std::span<const Message> messages_;
};

}  // namespace psdip::ip
