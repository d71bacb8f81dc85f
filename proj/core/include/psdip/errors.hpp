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
#include <stdexcept>
#include <string>

namespace psdip {

/// Caller passed arguments that violate an operation's preconditions
/// (degree mismatch, out-of-range vertex, m < 1, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A documented contract between two components was broken, e.g. a
/// permutation handed to canonicalization is not an isomorphism.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exhaustive routines refuse inputs beyond their enumeration bound.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// An isomorphism oracle returned something that is not an isomorphism.
class OracleIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bits recovered through a bit oracle do not decode to a valid answer.
class InconsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input failed to parse. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column),
        message_(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  /// The diagnostic without the "line:column: " prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace psdip
