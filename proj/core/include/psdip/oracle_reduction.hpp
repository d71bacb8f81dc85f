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

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <functional>
#include <string>
#include <string_view>

#include "psdip/colored_graph.hpp"
#include "psdip/permutation.hpp"
#include "psdip/protocol.hpp"
#include "psdip/prover.hpp"

namespace psdip::oracle {

/// Fixed-width binary encoding of a permutation of degree n: n fields of
/// ceil(log2 n) bits each, most significant bit first, images in index order.
class SolutionEncoding {
 public:
  explicit SolutionEncoding(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::size_t field_width() const noexcept { return field_width_; }
  std::size_t width() const noexcept { return n_ * field_width_; }

  /// String of '0'/'1'. Throws UsageError on degree mismatch.
  std::string encode(const Permutation& p) const;
  /// nullopt unless `bits` has the right length and decodes to a bijection.
  std::optional<Permutation> decode(std::string_view bits) const;

 private:
  std::size_t n_;
  std::size_t field_width_;
};

struct BitOracleConfig {
  ip::ProtocolParams params;
  ip::ProverKind prover = ip::ProverKind::honest;
  /// Protocol runs per bit query; the answer is the majority.
  std::size_t votes = 5;
  std::uint64_t seed = 0;
};

/// Promise oracle for "bit i of the canonical isomorphism is 1", answered by
/// running the pseudo-deterministic protocol `votes` times and taking the
/// majority of (outcome is not bottom and its bit i is 1).
class BitOracle {
 public:
  /// Runs the protocol once with the given (verifier seed, prover seed).
  using Runner = std::function<ip::VerifierOutcome(std::uint64_t verifier_seed, std::uint64_t prover_seed)>;

  /// Answers by running config.params.protocol against config.prover.
  BitOracle(ColoredGraph g1, ColoredGraph g2, BitOracleConfig config);
  /// Answers by calling `runner`; config.params and config.prover are unused.
  BitOracle(ColoredGraph g1, ColoredGraph g2, BitOracleConfig config, Runner runner);

  const ColoredGraph& g1() const noexcept { return g1_; }
  const ColoredGraph& g2() const noexcept { return g2_; }
  const SolutionEncoding& encoding() const noexcept { return encoding_; }

  /// One protocol run used to decide membership. Not counted as a query.
  ip::VerifierOutcome membership_run() const;

  /// Throws UsageError for bit >= encoding().width().
  bool query(std::size_t bit);

  std::size_t queries() const noexcept { return queries_.load(); }

 private:
  ip::VerifierOutcome run(std::uint64_t stream, std::uint64_t index) const;

  ColoredGraph g1_;
  ColoredGraph g2_;
  BitOracleConfig config_;
  Runner runner_;
  SolutionEncoding encoding_;
  std::atomic<std::size_t> queries_{0};
};

/// Recovers the canonical isomorphism one bit at a time through `oracle`.
/// A membership run comes first; if it yields bottom the result is nullopt
/// and no bit is ever queried. Throws InconsistencyError if the recovered
/// bits do not decode to an isomorphism g1 -> g2, and UsageError if the
/// oracle was built for a different pair.
std::optional<Permutation> extract_via_bit_oracle(const ColoredGraph& g1, const ColoredGraph& g2,
                                                  BitOracle& oracle);

}  // namespace psdip::oracle
