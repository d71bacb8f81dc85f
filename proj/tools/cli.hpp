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
#include <ostream>

namespace psdip::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kInvariantBreach = 3,
};

/// Entry point shared by the psdip binary and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

struct SelfCheckOptions {
  std::size_t max_n = 5;
  std::size_t max_dag_n = 5;
};

/// Runs every brute-force equivalence suite up to the given sizes, printing
/// one line per suite. Returns true when nothing mismatched.
bool selfcheck(const SelfCheckOptions& options, std::ostream& out);

}  // namespace psdip::cli
