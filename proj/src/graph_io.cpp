// Copyright 2026 The etdom Authors
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

#include "etdom/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <optional>
#include <set>
#include <sstream>

namespace etdom {
namespace {

constexpr std::string_view kWhitespace = " \t\r";

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    auto first = s.find_first_not_of(kWhitespace);
    if (first == std::string_view::npos) break;
    s.remove_prefix(first);
    auto end = s.find_first_of(kWhitespace);
    out.push_back(s.substr(0, end));
    if (end == std::string_view::npos) break;
    s.remove_prefix(end);
  }
  return out;
}

bool parse_index(std::string_view field, std::uint64_t& value) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last && value <= 0xFFFFFFF0ULL;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::optional<std::uint64_t> declared;
  std::uint64_t max_index = 0;
  bool any_vertex = false;
  bool first_content = true;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fields = split_fields(line);
    if (fields.size() != 2) throw ParseError(line_no, "expected two fields, got " + std::to_string(fields.size()));
    if (first_content && fields[0] == "n") {
      std::uint64_t count = 0;
      if (!parse_index(fields[1], count)) throw ParseError(line_no, "bad vertex count '" + std::string(fields[1]) + "'");
      declared = count;
      first_content = false;
      continue;
    }
    first_content = false;
    std::uint64_t u = 0, v = 0;
    if (!parse_index(fields[0], u) || !parse_index(fields[1], v)) {
      throw ParseError(line_no, "malformed edge '" + std::string(line) + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    if (declared && (u >= *declared || v >= *declared)) {
      throw ParseError(line_no, "vertex index exceeds declared count " + std::to_string(*declared));
    }
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge {" + std::to_string(e.first) + ", " + std::to_string(e.second) + "}");
    }
    edges.push_back(e);
    max_index = std::max({max_index, u, v});
    any_vertex = true;
  }
  std::size_t n = declared ? *declared : (any_vertex ? max_index + 1 : 0);
  return Graph(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(std::string_view line) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);

  std::size_t pos = 0;
  auto next = [&]() -> unsigned {
    if (pos >= line.size()) throw ParseError(0, "graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw ParseError(0, "graph6: byte " + std::to_string(c) + " out of range 63..126");
    return c - 63u;
  };

  std::uint64_t n = 0;
  unsigned first = next();
  if (first < 63) {
    n = first;
  } else {
    unsigned second = next();
    int digits = 3;
    if (second == 63) {
      digits = 6;
      n = 0;
    } else {
      n = second;
      digits = 2;
    }
    for (int i = 0; i < digits; ++i) n = (n << 6) | next();
  }
  if (n > 0xFFFFFFF0ULL) throw ParseError(0, "graph6: vertex count too large");

  std::vector<Edge> edges;
  unsigned chunk = 0;
  int bits_left = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (bits_left == 0) {
        chunk = next();
        bits_left = 6;
      }
      --bits_left;
      if ((chunk >> bits_left) & 1u) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (pos != line.size()) throw ParseError(0, "graph6: trailing bytes after adjacency data");
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  unsigned chunk = 0;
  int bits = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1u : 0u);
      if (++bits == 6) {
        out.push_back(static_cast<char>(chunk + 63));
        chunk = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((chunk << (6 - bits)) + 63));
  return out;
}

std::vector<Graph> parse_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return out;
}

}  // namespace etdom
