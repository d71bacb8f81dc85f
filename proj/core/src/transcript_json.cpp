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

#include "psdip/transcript_json.hpp"

#include <json.hpp>

namespace psdip::ip {

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const Permutation& p) {
  return ordered_json(std::vector<Point>(p.images().begin(), p.images().end()));
}

ordered_json to_json(const ColoredGraph& g) {
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  ordered_json out;
  out["n"] = g.n();
  out["edges"] = std::move(edges);
  out["colors"] = std::vector<Color>(g.colors().begin(), g.colors().end());
  return out;
}

ordered_json to_json(const GeneratorSet& gens) {
  ordered_json list = ordered_json::array();
  for (const auto& g : gens.gens()) list.push_back(to_json(g));
  return {{"n", gens.degree()}, {"generators", std::move(list)}};
}

ordered_json to_json(const ClaimList& claims) {
  ordered_json list = ordered_json::array();
  for (const auto& c : claims.claims) {
    ordered_json item;
    item["stage"] = c.stage;
    item["target"] = c.target;
    item["left"] = to_json(c.left);
    item["right"] = to_json(c.right);
    list.push_back(std::move(item));
  }
  return list;
}

ordered_json to_json(const GraphBatch& batch) {
  ordered_json list = ordered_json::array();
  for (const auto& g : batch.graphs) list.push_back(to_json(g));
  return list;
}

ordered_json to_json(const BitString& bits) {
  std::string s;
  s.reserve(bits.bits.size());
  for (bool b : bits.bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace

std::string transcript_to_json(const Transcript& t, int indent) {
  ordered_json doc;
  doc["input"] = {{"g1", to_json(t.g1)}, {"g2", to_json(t.g2)}};
  doc["seed"] = t.seed;
  doc["params"] = {{"protocol", std::string(to_string(t.params.protocol))}, {"m", t.params.m}};
  doc["prover"] = {{"strategy", t.prover}, {"note", t.prover_note}};
  ordered_json messages = ordered_json::array();
  for (const auto& msg : t.messages) {
    ordered_json item;
    item["sender"] = msg.sender == Sender::prover ? "prover" : "verifier";
    item["round"] = msg.round;
    item["kind"] = std::string(payload_kind(msg.payload));
    item["payload"] = std::visit([](const auto& p) { return to_json(p); }, msg.payload);
    messages.push_back(std::move(item));
  }
  doc["messages"] = std::move(messages);
  doc["outcome"] = t.outcome.is_bottom() ? ordered_json("BOTTOM") : to_json(*t.outcome.solution());
  return doc.dump(indent);
}

}  // namespace psdip::ip
