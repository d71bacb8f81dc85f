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

#include <string>

#include "psdip/protocol.hpp"

namespace psdip::ip {

/// JSON dump of a transcript with top-level fields
/// {input, seed, params, prover, messages, outcome}. Graphs are written as
/// {"n", "edges", "colors"}, permutations as image arrays, answer bits as a
/// "0101..." string and the outcome as an image array or "BOTTOM". Output
/// is byte-stable for equal transcripts.
std::string transcript_to_json(const Transcript& transcript, int indent = 2);

}  // namespace psdip::ip
