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

#include <filesystem>
#include <string>
#include <string_view>

#include "psdip/colored_graph.hpp"
#include "psdip/permutation.hpp"

namespace psdip {

// Graph text format:
//
//   n m
//   u v          (m lines, 0-based endpoints)
//   colors c0 c1 ... c(n-1)     (optional)
//
// Blank lines are ignored. Errors raise ParseError with line and column.

ColoredGraph parse_graph(std::string_view text);
ColoredGraph read_graph_file(const std::filesystem::path& path);
/// Inverse of parse_graph. The colors line is written only for colored graphs.
std::string format_graph(const ColoredGraph& g);

/// Space-separated image vector, e.g. "0 2 1 3".
Permutation parse_permutation(std::string_view text);

/// Reads a whole file; throws ParseError(0, 0, ...) if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

namespace text {

/// Line-oriented tokenizer with 1-based line/column tracking, shared by the
/// graph and digraph readers.
class LineReader {
 public:
  struct Token {
    std::string_view text;
    std::size_t line = 0;
    std::size_t column = 0;
  };

  explicit LineReader(std::string_view text) : text_(text) {}

  /// Advances to the next non-blank line. Returns false at end of input.
  bool next_line();
  bool at_line_end();
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return pos_ - line_start_ + 1; }

  /// Next whitespace-delimited token on the current line.
  Token token(std::string_view what);
  /// Parses the next token as an integer within [lo, hi].
  long long integer(std::string_view what, long long lo, long long hi);
  unsigned long long unsigned_integer(std::string_view what);
  void expect_line_end();
  [[noreturn]] void fail(std::string_view message) const;
  [[noreturn]] static void fail_at(const Token& t, std::string_view message);

 private:
  void skip_spaces();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_start_ = 0;
  std::size_t line_end_ = 0;
  std::size_t next_ = 0;
  std::size_t line_ = 0;
};

}  // namespace text

}  // namespace psdip
