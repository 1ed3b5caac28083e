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

#include "etdom/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "etdom/graph_io.hpp"

namespace etdom {
namespace {

// One or two center vertices, found by repeatedly stripping leaves.
std::vector<Vertex> centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all;
    for (Vertex v = 0; v < n; ++v) all.push_back(v);
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
  Rooting r = root_tree(t, root);
  std::vector<std::string> code(t.order());
  std::vector<std::string> parts;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    const Vertex v = *it;
    parts.clear();
    for (Vertex c : r.children(v)) parts.push_back(std::move(code[c]));
    std::sort(parts.begin(), parts.end());
    std::string& out = code[v];
    out.push_back('(');
    for (const auto& p : parts) out += p;
    out.push_back(')');
  }
  return std::move(code[root]);
}

}  // namespace

std::string canonical_code(const Tree& t) {
  std::string best;
  for (Vertex c : centers(t)) {
    std::string code = rooted_code(t, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

Tree tree_from_code(std::string_view code) {
  std::vector<Edge> edges;
  std::vector<Vertex> stack;
  Vertex next = 0;
  for (char ch : code) {
    if (ch == '(') {
      if (!stack.empty()) edges.emplace_back(stack.back(), next);
      else if (next != 0) throw std::invalid_argument("tree code has more than one root");
      stack.push_back(next++);
    } else if (ch == ')') {
      if (stack.empty()) throw std::invalid_argument("unbalanced tree code");
      stack.pop_back();
    } else {
      throw std::invalid_argument("tree code may only contain parentheses");
    }
  }
  if (!stack.empty() || next == 0) throw std::invalid_argument("unbalanced tree code");
  return Tree(next, edges);
}

Tree canonical_tree(const Tree& t) { return tree_from_code(canonical_code(t)); }

std::string canonical_graph6(const Tree& t) { return emit_graph6(canonical_tree(t).graph()); }

}  // namespace etdom
