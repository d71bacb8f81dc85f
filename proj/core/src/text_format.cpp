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

#include "psdip/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "psdip/errors.hpp"

namespace psdip {

namespace text {

bool LineReader::next_line() {
  while (next_ <= text_.size()) {
    if (next_ == text_.size()) {
      // A final line without newline was already consumed.
      return false;
    }
    line_start_ = next_;
    auto nl = text_.find('\n', line_start_);
    line_end_ = nl == std::string_view::npos ? text_.size() : nl;
    next_ = nl == std::string_view::npos ? text_.size() : nl + 1;
    ++line_;
    pos_ = line_start_;
    skip_spaces();
    if (pos_ < line_end_) return true;
  }
  return false;
}

void LineReader::skip_spaces() {
  while (pos_ < line_end_ &&
         (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
    ++pos_;
  }
}

bool LineReader::at_line_end() {
  skip_spaces();
  return pos_ >= line_end_;
}

LineReader::Token LineReader::token(std::string_view what) {
  skip_spaces();
  if (pos_ >= line_end_) fail("expected " + std::string(what));
  Token t{{}, line_, column()};
  const std::size_t start = pos_;
  while (pos_ < line_end_ && text_[pos_] != ' ' && text_[pos_] != '\t' && text_[pos_] != '\r') {
    ++pos_;
  }
  t.text = text_.substr(start, pos_ - start);
  return t;
}

long long LineReader::integer(std::string_view what, long long lo, long long hi) {
  const Token t = token(what);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    fail_at(t, "expected integer " + std::string(what) + ", got '" + std::string(t.text) + "'");
  }
  if (value < lo || value > hi) {
    fail_at(t, std::string(what) + " " + std::to_string(value) + " out of range [" +
                   std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return value;
}

unsigned long long LineReader::unsigned_integer(std::string_view what) {
  const Token t = token(what);
  unsigned long long value = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
  if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
    fail_at(t, "expected nonnegative integer " + std::string(what) + ", got '" +
                   std::string(t.text) + "'");
  }
  return value;
}

void LineReader::expect_line_end() {
  if (!at_line_end()) fail("unexpected trailing input");
}

void LineReader::fail(std::string_view message) const {
  throw ParseError(line_, column(), std::string(message));
}

void LineReader::fail_at(const Token& t, std::string_view message) {
  throw ParseError(t.line, t.column, std::string(message));
}

}  // namespace text

ColoredGraph parse_graph(std::string_view input) {
  text::LineReader in(input);
  if (!in.next_line()) throw ParseError(1, 1, "empty graph file");
  constexpr long long kMaxVertices = 1 << 20;
  const auto n = in.integer("vertex count n", 0, kMaxVertices);
  const auto max_edges = n * (n - 1) / 2;
  const auto m = in.integer("edge count m", 0, std::max<long long>(max_edges, 0));
  in.expect_line_end();

  ColoredGraph g(static_cast<std::size_t>(n));
  for (long long e = 0; e < m; ++e) {
    if (!in.next_line()) in.fail("expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(e));
    const auto u_line = in.line();
    const auto u_col = in.column();
    const auto u = in.integer("edge endpoint", 0, n - 1);
    const auto v = in.integer("edge endpoint", 0, n - 1);
    if (u == v) throw ParseError(u_line, u_col, "self-loop at vertex " + std::to_string(u));
    in.expect_line_end();
    g.add_edge(static_cast<Point>(u), static_cast<Point>(v));
  }

  if (in.next_line()) {
    const auto keyword = in.token("'colors'");
    if (keyword.text != "colors") {
      text::LineReader::fail_at(keyword, "expected 'colors' line or end of input");
    }
    for (long long v = 0; v < n; ++v) {
      g.set_color(static_cast<Point>(v), in.unsigned_integer("color"));
    }
    in.expect_line_end();
    if (in.next_line()) in.fail("unexpected input after colors line");
  }
  return g;
}

std::string format_graph(const ColoredGraph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  if (!g.is_uncolored()) {
    os << "colors";
    for (Color c : g.colors()) os << ' ' << c;
    os << '\n';
  }
  return os.str();
}

Permutation parse_permutation(std::string_view input) {
  text::LineReader in(input);
  std::vector<Point> images;
  if (in.next_line()) {
    while (!in.at_line_end()) {
      images.push_back(static_cast<Point>(in.integer("image", 0, (1 << 30))));
    }
    if (in.next_line()) in.fail("permutation must be on a single line");
  }
  if (!is_bijection(images)) throw ParseError(1, 1, "image vector is not a bijection");
  return Permutation(std::move(images));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ColoredGraph read_graph_file(const std::filesystem::path& path) {
  return parse_graph(read_text_file(path));
}

}  // namespace psdip
