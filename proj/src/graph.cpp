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

#include "etdom/graph.hpp"

#include <algorithm>

namespace etdom {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(std::max(u, v)) +
                                  " out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  targets_.resize(offsets_[n]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    targets_[fill[u]++] = v;
    targets_[fill[v]++] = u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(v) + ", " +
                                  std::to_string(*dup) + "}");
    }
  }
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

Tree::Tree(Graph g) : graph_(std::move(g)) {
  if (graph_.order() == 0) throw std::invalid_argument("a tree needs at least one vertex");
  if (graph_.size() + 1 != graph_.order()) {
    throw std::invalid_argument("not a tree: " + std::to_string(graph_.order()) +
                                " vertices but " + std::to_string(graph_.size()) + " edges");
  }
  if (!is_connected(graph_)) throw std::invalid_argument("not a tree: graph is disconnected");
}

std::vector<Vertex> Tree::leaves() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

Rooting root_tree(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  if (root >= n) throw std::out_of_range("root " + std::to_string(root) + " out of range");
  Rooting r;
  r.root = root;
  r.parent.assign(n, Rooting::kNone);
  r.depth.assign(n, 0);
  r.order.reserve(n);
  r.order.push_back(root);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    Vertex v = r.order[head];
    for (Vertex w : t.neighbors(v)) {
      if (w == r.parent[v]) continue;
      r.parent[w] = v;
      r.depth[w] = r.depth[v] + 1;
      r.order.push_back(w);
    }
  }
  r.child_offsets.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    r.child_offsets[v + 1] = r.child_offsets[v] + t.degree(v) - (v == root ? 0 : 1);
  }
  r.child_list.resize(n - 1);
  std::vector<std::size_t> fill(r.child_offsets.begin(), r.child_offsets.end() - 1);
  for (Vertex v : r.order) {
    if (v != root) r.child_list[fill[r.parent[v]]++] = v;
  }
  return r;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  InducedSubgraph out;
  out.original.assign(keep.begin(), keep.end());
  std::sort(out.original.begin(), out.original.end());
  constexpr Vertex kAbsent = static_cast<Vertex>(-1);
  std::vector<Vertex> index(g.order(), kAbsent);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    index[out.original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (Vertex u : out.original) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && index[v] != kAbsent) edges.emplace_back(index[u], index[v]);
    }
  }
  out.graph = Graph(out.original.size(), edges);
  return out;
}

SubTree remove_vertices(const Tree& t, std::span<const Vertex> removed) {
  std::vector<char> gone(t.order(), 0);
  for (Vertex v : removed) gone.at(v) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  auto sub = induced_subgraph(t.graph(), keep);
  return {Tree(std::move(sub.graph)), std::move(sub.original)};
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(leaves + 1, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  auto edges = path_graph(n).edges();
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

}  // namespace etdom
