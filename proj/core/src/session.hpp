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

// Verifier-side plumbing shared by the protocol implementations. Not
// installed; provers never see anything declared here.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "psdip/protocol.hpp"
#include "psdip/prover.hpp"
#include "psdip/rng.hpp"

namespace psdip::ip::detail {

/// Message log plus the prover connection for one protocol run.
class Session {
 public:
  Session(ProtocolKind kind, std::size_t m, const ColoredGraph& g1, const ColoredGraph& g2,
          ProverStrategy& prover, std::vector<Message>& log)
      : kind_(kind), m_(m), g1_(g1), g2_(g2), prover_(prover), log_(log) {}

  void send(Payload payload) {
    log_.push_back(Message{Sender::verifier, log_.size(), std::move(payload)});
  }

  /// Next prover message if it has type T; nullopt if the prover sent
  /// something else or failed.
  template <class T>
  std::optional<T> receive() {
    Payload payload;
    try {
      payload = prover_.next_message(ProverView(kind_, m_, g1_, g2_, log_));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    log_.push_back(Message{Sender::prover, log_.size(), payload});
    if (auto* value = std::get_if<T>(&payload)) return std::move(*value);
    return std::nullopt;
  }

  std::size_t repetitions() const noexcept { return m_; }

 private:
  ProtocolKind kind_;
  std::size_t m_;
  const ColoredGraph& g1_;
  const ColoredGraph& g2_;
  ProverStrategy& prover_;
  std::vector<Message>& log_;
};

/// Announces the claims, sends one shuffled challenge per claim and round,
/// and checks the prover's answers. True iff every answer is right. An
/// empty claim list is accepted without any exchange.
bool defend_claims(Session& session, std::vector<Claim> claims, Rng& rng);

}  // namespace psdip::ip::detail
