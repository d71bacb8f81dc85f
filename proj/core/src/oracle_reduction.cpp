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

#include "psdip/oracle_reduction.hpp"

#include <bit>
#include <vector>

#include "psdip/errors.hpp"
#include "psdip/psd_gi.hpp"
#include "psdip/rng.hpp"

namespace psdip::oracle {

namespace {

constexpr std::uint64_t kMembershipStream = 0x200;
constexpr std::uint64_t kQueryStream = 0x300;

}  // namespace

SolutionEncoding::SolutionEncoding(std::size_t n)
    : n_(n), field_width_(n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1))) {}

std::string SolutionEncoding::encode(const Permutation& p) const {
  if (p.degree() != n_) throw UsageError("encode: permutation degree does not match encoding");
  std::string bits;
  bits.reserve(width());
  for (std::size_t i = 0; i < n_; ++i) {
    const auto value = static_cast<std::uint64_t>(p[i]);
    for (std::size_t b = field_width_; b > 0; --b) bits.push_back(((value >> (b - 1)) & 1u) ? '1' : '0');
  }
  return bits;
}

std::optional<Permutation> SolutionEncoding::decode(std::string_view bits) const {
  if (bits.size() != width()) return std::nullopt;
  std::vector<Point> images(n_, 0);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t value = 0;
    for (std::size_t b = 0; b < field_width_; ++b) {
      const char c = bits[i * field_width_ + b];
      if (c != '0' && c != '1') return std::nullopt;
      value = (value << 1) | (c == '1' ? 1u : 0u);
    }
    images[i] = static_cast<Point>(value);
  }
  if (!is_bijection(images)) return std::nullopt;
  return Permutation(std::move(images));
}

BitOracle::BitOracle(ColoredGraph g1, ColoredGraph g2, BitOracleConfig config, Runner runner)
    : g1_(std::move(g1)), g2_(std::move(g2)), config_(config), runner_(std::move(runner)),
      encoding_(g1_.n()) {
  if (config_.votes < 1) throw UsageError("BitOracle: votes must be at least 1");
  if (!runner_) throw UsageError("BitOracle: empty runner");
}

BitOracle::BitOracle(ColoredGraph g1, ColoredGraph g2, BitOracleConfig config)
    : BitOracle(std::move(g1), std::move(g2), config, {[](std::uint64_t, std::uint64_t) {
                  return ip::VerifierOutcome::bottom();
                }}) {
  config_.params.validate();
  runner_ = [this](std::uint64_t verifier_seed, std::uint64_t prover_seed) {
    auto prover = ip::make_prover(config_.prover, prover_seed);
    return ip::run_protocol(g1_, g2_, *prover, config_.params, verifier_seed).outcome;
  };
}

ip::VerifierOutcome BitOracle::run(std::uint64_t stream, std::uint64_t index) const {
  return runner_(derive_seed(config_.seed, stream, 2 * index),
                 derive_seed(config_.seed, stream, 2 * index + 1));
}

ip::VerifierOutcome BitOracle::membership_run() const { return run(kMembershipStream, 0); }

bool BitOracle::query(std::size_t bit) {
  if (bit >= encoding_.width()) throw UsageError("BitOracle: bit index out of range");
  queries_.fetch_add(1);
  std::size_t ones = 0;
  for (std::size_t v = 0; v < config_.votes; ++v) {
    const auto outcome = run(kQueryStream, bit * config_.votes + v);
    if (outcome.solution() && encoding_.encode(*outcome.solution())[bit] == '1') ++ones;
  }
  return 2 * ones > config_.votes;
}

std::optional<Permutation> extract_via_bit_oracle(const ColoredGraph& g1, const ColoredGraph& g2,
                                                  BitOracle& oracle) {
  if (!(oracle.g1() == g1) || !(oracle.g2() == g2)) {
    throw UsageError("extract_via_bit_oracle: oracle wraps a different input pair");
  }
  if (oracle.membership_run().is_bottom()) return std::nullopt;

  const auto& encoding = oracle.encoding();
  std::string bits(encoding.width(), '0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (oracle.query(i)) bits[i] = '1';
  }
  auto decoded = encoding.decode(bits);
  if (!decoded) throw InconsistencyError("oracle bits " + bits + " do not decode to a permutation");
  if (!is_isomorphism(g1, g2, *decoded)) {
    throw InconsistencyError("oracle bits " + bits + " decode to a non-isomorphism");
  }
  return decoded;
}

}  // namespace psdip::oracle
