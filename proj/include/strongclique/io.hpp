// Copyright 2026 The strongclique Authors
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

#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "strongclique/errors.hpp"
#include "strongclique/graph.hpp"

namespace strongclique {

namespace detail {

inline constexpr int kGraph6Bias = 63;
inline constexpr int kGraph6MaxOrder = 258047;

inline std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Decodes one graph6 record. A leading ">>graph6<<" header and a trailing
/// newline are accepted. Orders up to 258047 are supported.
inline Graph parse_graph6(std::string_view text) {
  using detail::kGraph6Bias;
  text = detail::trim_line_end(text);
  std::size_t pos = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6 record truncated", at, ParseError::Kind::byte_offset);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kGraph6Bias || c > 126)
      throw ParseError("invalid graph6 byte " + std::to_string(c), at, ParseError::Kind::byte_offset);
    return c - kGraph6Bias;
  };

  if (pos >= text.size()) throw ParseError("empty graph6 record", pos, ParseError::Kind::byte_offset);
  long n = 0;
  if (text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~')
      throw ParseError("graph6 orders above 258047 are not supported", pos, ParseError::Kind::byte_offset);
    for (int i = 1; i <= 3; ++i) n = (n << 6) | sextet(pos + i);
    if (n < 63) throw ParseError("non-canonical graph6 length header", pos, ParseError::Kind::byte_offset);
    pos += 4;
  } else {
    n = sextet(pos);
    pos += 1;
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < pos + body)
    throw ParseError("graph6 record truncated: expected " + std::to_string(body) + " body bytes", text.size(),
                     ParseError::Kind::byte_offset);
  if (text.size() > pos + body)
    throw ParseError("trailing bytes after graph6 record", pos + body, ParseError::Kind::byte_offset);

  std::vector<Edge> edges;
  long k = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(pos + static_cast<std::size_t>(k / 6));
      if ((value >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (sextet(last) & ((1 << pad) - 1))
      throw ParseError("nonzero graph6 padding bits", last, ParseError::Kind::byte_offset);
  }
  return Graph(static_cast<int>(n), edges);
}

/// Encodes `g` as a graph6 record without a trailing newline.
inline std::string write_graph6(const Graph& g) {
  using detail::kGraph6Bias;
  const int n = g.order();
  if (n > detail::kGraph6MaxOrder) throw InputError("graph too large for graph6 encoding");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
  }
  int acc = 0, used = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + kGraph6Bias));
        acc = used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kGraph6Bias));
  return out;
}

namespace detail {

inline bool parse_int(std::string_view token, long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace detail

/// Reads "n m" followed by m lines "u v" (0-based). Blank lines and lines
/// starting with '#' are ignored. Errors name the offending 1-based line.
inline Graph parse_edge_list(std::string_view text) {
  using Kind = ParseError::Kind;
  long n = -1, m = -1;
  std::set<std::pair<long, long>> seen;
  std::vector<Edge> edges;
  std::size_t line_no = 0, start = 0, header_line = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (tokens.size() != 2) throw ParseError("expected two integers", line_no, Kind::line);
    long a = 0, b = 0;
    if (!detail::parse_int(tokens[0], a) || !detail::parse_int(tokens[1], b))
      throw ParseError("expected two integers", line_no, Kind::line);
    if (n < 0) {
      if (a < 0 || b < 0) throw ParseError("negative vertex or edge count", line_no, Kind::line);
      n = a;
      m = b;
      header_line = line_no;
    } else {
      if (a < 0 || b < 0 || a >= n || b >= n)
        throw ParseError("vertex label out of range 0.." + std::to_string(n - 1), line_no, Kind::line);
      if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no, Kind::line);
      if (!seen.emplace(std::min(a, b), std::max(a, b)).second)
        throw ParseError("duplicate edge " + std::to_string(a) + " " + std::to_string(b), line_no, Kind::line);
      if (static_cast<long>(edges.size()) == m)
        throw ParseError("more edges than the declared " + std::to_string(m), line_no, Kind::line);
      edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (end == text.size()) break;
  }
  if (n < 0) throw ParseError("missing \"n m\" header", line_no, Kind::line);
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()),
                     header_line, Kind::line);
  return Graph(static_cast<int>(n), edges);
}

/// Normalized edge list: header, then edges sorted with u < v, one per line.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const Edge& e : edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace strongclique
