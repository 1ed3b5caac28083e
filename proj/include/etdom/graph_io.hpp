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

#ifndef ETDOM_GRAPH_IO_HPP
#define ETDOM_GRAPH_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

/// Malformed textual graph input. `line()` is 1-based, or 0 when the error
/// is not tied to a particular line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// are ignored. An optional leading "n <count>" line declares the vertex count
// (so isolated vertices survive); otherwise the count is 1 + max index.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

// graph6 (the nauty/geng format): N(n) followed by the upper triangle in
// column order, six bits per printable byte. An optional ">>graph6<<" header
// is accepted; a trailing newline is tolerated.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

/// Reads every non-empty, non-'#' line of a graph6 stream.
std::vector<Graph> parse_graph6_stream(std::istream& in);

}  // namespace etdom

#endif  // ETDOM_GRAPH_IO_HPP
