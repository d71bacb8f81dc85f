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

#include "psdip/prover.hpp"

#include <stdexcept>

#include "psdip/brute_force.hpp"
#include "psdip/canonical.hpp"
#include "psdip/errors.hpp"
#include "psdip/rng.hpp"
#include "psdip/stabilizer_chain.hpp"

namespace psdip::ip {

namespace {

// What a strategy sends in its opening messages.
struct Opening {
  GeneratorSet gens;
  Permutation group_phi;
  Permutation comb_phi;
};

class StandardProver final : public ProverStrategy {
 public:
  StandardProver(ProverKind kind, std::uint64_t seed) : kind_(kind), rng_(seed) {}

  std::string name() const override { return std::string(to_string(kind_)); }
  std::string note() const override { return note_; }

  Payload next_message(const ProverView& view) override {
    const std::size_t turn = view.prover_turn();
    switch (view.protocol()) {
      case ProtocolKind::group:
        if (turn == 0) return opening(view).gens;
        if (turn == 1) return opening(view).group_phi;
        if (turn == 2) return answer(view);
        break;
      case ProtocolKind::comb:
        if (turn == 0) return opening(view).comb_phi;
        if (turn == 1) return answer(view);
        break;
      case ProtocolKind::aut_verification:
      case ProtocolKind::gni:
        if (turn == 0) return answer(view);
        break;
    }
    throw std::logic_error("prover asked to speak out of turn");
  }

 private:
  const Opening& opening(const ProverView& view) {
    if (!opening_) opening_ = plan(view.g1(), view.g2());
    return *opening_;
  }

  Permutation random_element(const GeneratorSet& gens, std::size_t n) {
    Permutation r = Permutation::identity(n);
    if (gens.empty()) return r;
    const std::size_t steps = 2 * n + 5;
    for (std::size_t i = 0; i < steps; ++i) {
      r = compose(r, gens.gens()[rng_.below(gens.size())]);
    }
    return r;
  }

  Opening plan(const ColoredGraph& g1, const ColoredGraph& g2) {
    const std::size_t n = g1.n();
    const GeneratorSet true_gens = aut_generators_via_gi(g1, brute_force_solver());
    const auto iso = n == g2.n() ? brute_force_lex_first(g1, g2) : std::nullopt;
    if (!iso) {
      // Nothing valid to send; any isomorphism claim will be rejected.
      const auto id = Permutation::identity(n);
      return {kind_ == ProverKind::coin_flipper ? GeneratorSet(n) : true_gens, id, id};
    }
    const Permutation& canonical = *iso;

    switch (kind_) {
      case ProverKind::honest:
        return {true_gens, canonical, canonical};

      case ProverKind::lex_liar: {
        if (true_gens.empty()) {
          note_ = "degraded to honest: the isomorphism is unique";
          return {true_gens, canonical, canonical};
        }
        Permutation a = random_element(true_gens, n);
        if (a.is_identity()) a = true_gens.gens().front();
        const Permutation lie = compose(canonical, a);
        return {true_gens, lie, lie};
      }

      case ProverKind::subgroup_liar: {
        const StabilizerChain chain = schreier_sims(true_gens);
        if (chain.levels().empty()) {
          note_ = "degraded to honest: Aut(G1) is trivial, no proper subgroup to claim";
          return {true_gens, canonical, canonical};
        }
        // Claim H_2 = Stab(alpha_1) and move alpha_1 off its canonical image.
        const auto& top = chain.levels()[0];
        GeneratorSet sub(n);
        if (chain.levels().size() > 1) {
          for (const auto& g : chain.levels()[1].generators) sub.add(g);
        }
        std::size_t k = 0;
        while (top.orbit[k] == top.base_point) ++k;
        const Permutation lie = compose(canonical, top.transversal[k]);
        const Permutation sub_canonical = find_first_isomorphism(lie, schreier_sims(sub), g1, g2);
        return {sub, lie, sub_canonical};
      }

      case ProverKind::coin_flipper: {
        const Permutation any = compose(canonical, random_element(true_gens, n));
        return {GeneratorSet(n), any, any};
      }
    }
    throw std::logic_error("unknown prover kind");
  }

  BitString answer(const ProverView& view) {
    const auto* claims = view.last<ClaimList>();
    const auto* batch = view.last<GraphBatch>();
    if (!claims || !batch || claims->claims.empty() ||
        batch->graphs.size() % claims->claims.size() != 0) {
      throw std::logic_error("no challenge batch to answer");
    }
    const std::size_t m = batch->graphs.size() / claims->claims.size();
    BitString out;
    out.bits.reserve(batch->graphs.size());
    for (std::size_t c = 0; c < claims->claims.size(); ++c) {
      const Claim& claim = claims->claims[c];
      bool distinguishable = true;
      if (kind_ == ProverKind::lex_liar || kind_ == ProverKind::subgroup_liar) {
        distinguishable = !brute_force_isomorphic(claim.left, claim.right);
      }
      for (std::size_t t = 0; t < m; ++t) {
        const ColoredGraph& challenge = batch->graphs[c * m + t];
        if (kind_ == ProverKind::coin_flipper || !distinguishable) {
          out.bits.push_back(rng_.coin());
        } else {
          out.bits.push_back(!brute_force_isomorphic(challenge, claim.left));
        }
      }
    }
    return out;
  }

  ProverKind kind_;
  Rng rng_;
  std::optional<Opening> opening_;
  std::string note_;
};

}  // namespace

std::string_view to_string(ProverKind kind) {
  switch (kind) {
    case ProverKind::honest: return "honest";
    case ProverKind::lex_liar: return "lex_liar";
    case ProverKind::subgroup_liar: return "subgroup_liar";
    case ProverKind::coin_flipper: return "coin_flipper";
  }
  return "unknown";
}

std::optional<ProverKind> parse_prover_kind(std::string_view name) {
  for (auto k : kAllProverKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::vector<ProverKind> parse_prover_kinds(std::string_view list) {
  std::vector<ProverKind> kinds;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto item = list.substr(0, comma);
    const auto kind = parse_prover_kind(item);
    if (!kind) throw UsageError("unknown prover strategy '" + std::string(item) + "'");
    kinds.push_back(*kind);
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return kinds;
}

std::unique_ptr<ProverStrategy> make_prover(ProverKind kind, std::uint64_t seed) {
  return std::make_unique<StandardProver>(kind, seed);
}

}  // namespace psdip::ip
