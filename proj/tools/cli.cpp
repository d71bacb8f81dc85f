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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <string>
#include <vector>

#include "psdip/brute_force.hpp"
#include "psdip/canonical.hpp"
#include "psdip/config_graph.hpp"
#include "psdip/errors.hpp"
#include "psdip/lex_path.hpp"
#include "psdip/oracle_reduction.hpp"
#include "psdip/psd_gi.hpp"
#include "psdip/psd_test.hpp"
#include "psdip/rng.hpp"
#include "psdip/stabilizer_chain.hpp"
#include "psdip/text_format.hpp"
#include "psdip/transcript_json.hpp"

namespace psdip::cli {

namespace {

// Stream ids for expanding the user seed.
constexpr std::uint64_t kVerifierStream = 1;
constexpr std::uint64_t kProverStream = 2;

ColoredGraph load_graph(const std::string& path) {
  try {
    return read_graph_file(path);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), path + ": " + e.message());
  }
}

ip::ProtocolKind protocol_from(const std::string& name) {
  const auto kind = ip::parse_protocol_kind(name);
  if (!kind || (*kind != ip::ProtocolKind::group && *kind != ip::ProtocolKind::comb)) {
    throw UsageError("--protocol must be 'group' or 'comb'");
  }
  return *kind;
}

int canon_iso(const std::string& p1, const std::string& p2, std::ostream& out) {
  const auto g1 = load_graph(p1);
  const auto g2 = load_graph(p2);
  const auto solver = brute_force_solver();
  const auto phi = g1.n() == g2.n() ? solver(g1, g2) : std::nullopt;
  if (!phi) {
    out << "BOTTOM\n";
    return kOk;
  }
  const auto chain = schreier_sims(aut_generators_via_gi(g1, solver));
  out << find_first_isomorphism(*phi, chain, g1, g2).to_string() << '\n';
  return kOk;
}

int aut(const std::string& path, std::ostream& out) {
  const auto g = load_graph(path);
  const auto gens = aut_generators_via_gi(g, brute_force_solver());
  const auto chain = schreier_sims(gens);
  out << "order " << chain.order() << '\n';
  out << "generators " << gens.size() << '\n';
  for (const auto& p : gens.gens()) out << p.to_string() << '\n';
  return kOk;
}

struct ProveOptions {
  std::string protocol = "group";
  std::string strategy = "honest";
  std::uint64_t seed = 1;
  std::size_t m = 20;
  std::string out_path;
  bool print_transcript = false;
};

int prove_iso(const std::string& p1, const std::string& p2, const ProveOptions& opt,
              std::ostream& out) {
  const auto g1 = load_graph(p1);
  const auto g2 = load_graph(p2);
  const auto kind = ip::parse_prover_kind(opt.strategy);
  if (!kind) throw UsageError("unknown --strategy '" + opt.strategy + "'");
  ip::ProtocolParams params{opt.m, protocol_from(opt.protocol)};
  auto prover = ip::make_prover(*kind, derive_seed(opt.seed, kProverStream));
  const auto transcript =
      ip::run_protocol(g1, g2, *prover, params, derive_seed(opt.seed, kVerifierStream));
  out << transcript.outcome.to_string() << '\n';
  const std::string json = ip::transcript_to_json(transcript);
  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + opt.out_path);
    file << json << '\n';
  }
  if (opt.print_transcript) out << json << '\n';
  return kOk;
}

struct PsdOptions {
  std::string protocol = "group";
  std::string strategies = "honest,lex_liar,subgroup_liar,coin_flipper";
  std::size_t trials = 200;
  std::uint64_t seed = 1;
  std::size_t m = 20;
  unsigned threads = 0;
};

int psd_test(const std::string& p1, const std::string& p2, const PsdOptions& opt, std::ostream& out) {
  const auto g1 = load_graph(p1);
  const auto g2 = load_graph(p2);
  const auto kinds = ip::parse_prover_kinds(opt.strategies);
  if (kinds.empty()) throw UsageError("--strategies is empty");
  ip::ProtocolParams params{opt.m, protocol_from(opt.protocol)};
  const auto report = ip::psd_statistical_test(params, g1, g2, kinds, opt.trials, opt.seed, opt.threads);
  out << report.to_text();
  return report.pseudo_deterministic() ? kOk : kInvariantBreach;
}

int lexpath(const std::string& path, std::ostream& out) {
  const auto g = nl::read_digraph_file(path);
  const auto p = nl::lex_first_shortest_path(g);
  if (!p) {
    out << "BOTTOM\n";
    return kOk;
  }
  for (std::size_t i = 0; i < p->size(); ++i) out << (i ? " " : "") << (*p)[i];
  out << '\n';
  return kOk;
}

struct ExtractOptions {
  std::uint64_t seed = 1;
  std::size_t m = 20;
  std::size_t votes = 5;
  std::string protocol = "group";
};

int extract_bits(const std::string& p1, const std::string& p2, const ExtractOptions& opt,
                 std::ostream& out) {
  const auto g1 = load_graph(p1);
  const auto g2 = load_graph(p2);
  oracle::BitOracleConfig config;
  config.params = {opt.m, protocol_from(opt.protocol)};
  config.votes = opt.votes;
  config.seed = opt.seed;
  oracle::BitOracle bit_oracle(g1, g2, config);
  const auto solution = oracle::extract_via_bit_oracle(g1, g2, bit_oracle);
  if (!solution) {
    out << "BOTTOM\n";
  } else {
    out << "bits " << bit_oracle.encoding().encode(*solution) << '\n';
    out << "solution " << solution->to_string() << '\n';
  }
  out << "queries " << bit_oracle.queries() << '\n';
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"psdip: pseudo-deterministic proofs for graph isomorphism and NL search"};
  app.require_subcommand(1);

  std::string g1_path, g2_path, d_path;

  auto* canon = app.add_subcommand("canon-iso", "Print the lexicographically first isomorphism G1 -> G2");
  canon->add_option("G1", g1_path)->required();
  canon->add_option("G2", g2_path)->required();

  auto* aut_cmd = app.add_subcommand("aut", "Print generators and order of Aut(G)");
  aut_cmd->add_option("G", g1_path)->required();

  ProveOptions prove;
  auto* prove_cmd = app.add_subcommand("prove-iso", "Run one protocol instance");
  prove_cmd->add_option("G1", g1_path)->required();
  prove_cmd->add_option("G2", g2_path)->required();
  prove_cmd->add_option("--protocol", prove.protocol, "group or comb")->capture_default_str();
  prove_cmd->add_option("--strategy", prove.strategy, "honest, lex_liar, subgroup_liar, coin_flipper")
      ->capture_default_str();
  prove_cmd->add_option("--seed", prove.seed)->capture_default_str();
  prove_cmd->add_option("--m", prove.m, "GNI rounds per claim")->capture_default_str()
      ->check(CLI::PositiveNumber);
  prove_cmd->add_option("--out", prove.out_path, "Write the JSON transcript here");
  prove_cmd->add_flag("--transcript", prove.print_transcript, "Print the JSON transcript");

  PsdOptions psd;
  auto* psd_cmd = app.add_subcommand("psd-test", "Statistical pseudo-determinism harness");
  psd_cmd->add_option("G1", g1_path)->required();
  psd_cmd->add_option("G2", g2_path)->required();
  psd_cmd->add_option("--protocol", psd.protocol)->capture_default_str();
  psd_cmd->add_option("--strategies", psd.strategies)->capture_default_str();
  psd_cmd->add_option("--trials", psd.trials)->capture_default_str()->check(CLI::PositiveNumber);
  psd_cmd->add_option("--seed", psd.seed)->capture_default_str();
  psd_cmd->add_option("--m", psd.m)->capture_default_str()->check(CLI::PositiveNumber);
  psd_cmd->add_option("--threads", psd.threads, "0 = all cores")->capture_default_str();

  auto* lex_cmd = app.add_subcommand("lexpath", "Print the lexicographically first shortest accepting path");
  lex_cmd->add_option("D", d_path)->required();

  ExtractOptions extract;
  auto* extract_cmd = app.add_subcommand("extract-bits", "Recover the canonical isomorphism bit by bit");
  extract_cmd->add_option("G1", g1_path)->required();
  extract_cmd->add_option("G2", g2_path)->required();
  extract_cmd->add_option("--seed", extract.seed)->capture_default_str();
  extract_cmd->add_option("--m", extract.m)->capture_default_str()->check(CLI::PositiveNumber);
  extract_cmd->add_option("--votes", extract.votes)->capture_default_str()->check(CLI::PositiveNumber);
  extract_cmd->add_option("--protocol", extract.protocol)->capture_default_str();

  SelfCheckOptions check;
  auto* self_cmd = app.add_subcommand("selfcheck", "Run the brute-force equivalence suites");
  self_cmd->add_option("--max-n", check.max_n)->capture_default_str()->check(CLI::Range(0, 6));
  self_cmd->add_option("--max-dag-n", check.max_dag_n)->capture_default_str()->check(CLI::Range(1, 6));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    if (*canon) return canon_iso(g1_path, g2_path, out);
    if (*aut_cmd) return aut(g1_path, out);
    if (*prove_cmd) return prove_iso(g1_path, g2_path, prove, out);
    if (*psd_cmd) return psd_test(g1_path, g2_path, psd, out);
    if (*lex_cmd) return lexpath(d_path, out);
    if (*extract_cmd) return extract_bits(g1_path, g2_path, extract, out);
    if (*self_cmd) return selfcheck(check, out) ? kOk : kInvariantBreach;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const SizeError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "invariant breach: " << e.what() << '\n';
    return kInvariantBreach;
  }
  return kInputError;
}

}  // namespace psdip::cli
