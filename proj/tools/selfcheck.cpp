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

#include <functional>
#include <set>
#include <string>

#include "cli.hpp"
#include "psdip/brute_force.hpp"
#include "psdip/canonical.hpp"
#include "psdip/enumerate.hpp"
#include "psdip/lex_path.hpp"
#include "psdip/psd_gi.hpp"
#include "psdip/rng.hpp"
#include "psdip/stabilizer_chain.hpp"

namespace psdip::cli {

namespace {

struct Suite {
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  std::string first_mismatch;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++cases;
    if (!ok && mismatches++ == 0) first_mismatch = describe();
  }
};

bool report(std::ostream& out, const std::string& name, const Suite& s) {
  if (s.mismatches == 0) {
    out << "ok       " << name << " (" << s.cases << " cases)\n";
    return true;
  }
  out << "MISMATCH " << name << " (" << s.mismatches << "/" << s.cases << "): " << s.first_mismatch
      << '\n';
  return false;
}

std::string edges_of(const ColoredGraph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " {";
  for (const auto& [u, v] : g.edges()) s += " " + std::to_string(u) + std::to_string(v);
  return s + " }";
}

}  // namespace

bool selfcheck(const SelfCheckOptions& options, std::ostream& out) {
  bool ok = true;

  Suite order, membership, canonical, protocols;
  Rng rng(derive_seed(0x5e1f, 0));
  for (std::size_t n = 0; n <= options.max_n; ++n) {
    const auto perms = all_permutations(n);
    for_each_graph(n, [&](const ColoredGraph& g) {
      const auto automorphisms = brute_force_isomorphisms(g, g);
      const auto gens = aut_generators_via_gi(g, brute_force_solver());
      const auto chain = schreier_sims(gens);
      order.check(chain.order() == automorphisms.size(), [&] { return edges_of(g); });

      std::set<Permutation> aut_set(automorphisms.begin(), automorphisms.end());
      bool same = true;
      for (const auto& p : perms) same = same && (chain.contains(p) == (aut_set.count(p) == 1));
      membership.check(same, [&] { return edges_of(g); });

      for (const auto& pi : perms) {
        const auto g2 = g.relabeled(pi);
        const auto expected = brute_force_lex_first(g, g2);
        canonical.check(expected && find_first_isomorphism(pi, chain, g, g2) == *expected,
                        [&] { return edges_of(g) + " relabeled by " + pi.to_string(); });
      }

      const auto g2 = g.relabeled(rng.permutation(n));
      const auto expected = brute_force_lex_first(g, g2);
      auto honest1 = ip::make_prover(ip::ProverKind::honest, rng.next());
      auto honest2 = ip::make_prover(ip::ProverKind::honest, rng.next());
      const auto group = ip::run_psd_gi_group(g, g2, *honest1, {}, rng.next());
      const auto comb = ip::run_psd_gi_comb(g, g2, *honest2, {20, ip::ProtocolKind::comb}, rng.next());
      protocols.check(group.outcome.solution() == expected && comb.outcome.solution() == expected,
                      [&] { return edges_of(g); });
    });
  }
  ok &= report(out, "schreier-sims order = brute-force |Aut|", order);
  ok &= report(out, "sifting membership = brute-force Aut", membership);
  ok &= report(out, "find_first_isomorphism = brute-force lex-first", canonical);
  ok &= report(out, "group/comb protocol honest output = lex-first", protocols);

  Suite paths;
  for (std::size_t n = 1; n <= options.max_dag_n; ++n) {
    for_each_ordered_dag(n, [&](const std::vector<std::vector<nl::Node>>& succ) {
      for (std::uint32_t accept_mask = 0; accept_mask < (1u << n); ++accept_mask) {
        std::vector<nl::Node> accepting;
        for (std::size_t v = 0; v < n; ++v) {
          if ((accept_mask >> v) & 1u) accepting.push_back(static_cast<nl::Node>(v));
        }
        for (std::size_t s = 0; s < n; ++s) {
          const nl::ConfigGraph g(succ, static_cast<nl::Node>(s), accepting);
          paths.check(nl::lex_first_shortest_path(g) == nl::brute_force_lex_first(g),
                      [&] { return nl::format_digraph(g); });
        }
      }
    });
  }
  ok &= report(out, "lex_first_shortest_path = brute-force on ordered DAGs", paths);
  return ok;
}

}  // namespace psdip::cli
