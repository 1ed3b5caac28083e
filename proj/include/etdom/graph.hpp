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

#ifndef ETDOM_GRAPH_HPP
#define ETDOM_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace etdom {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when a caller asks for more work than a configured guard rail
/// allows (oracle state-space size, brute-force subset search, ...).
class GuardRailError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Simple undirected graph on dense vertex indices [0, n).
///
/// Adjacency is stored in compressed form: `neighbors(v)` is a sorted span.
/// The graph is immutable once built; every constructor validates that the
/// edge set has no self-loops and no duplicates.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph with `n` vertices from an edge list. Throws
  /// std::invalid_argument on self-loops, duplicate edges or endpoints >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t size() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

/// A connected acyclic graph with at least one vertex. Validated on
/// construction.
class Tree {
 public:
  /// Throws std::invalid_argument unless `g` is a non-empty tree.
  explicit Tree(Graph g);
  Tree(std::size_t n, std::span<const Edge> edges) : Tree(Graph(n, edges)) {}
  Tree(std::size_t n, std::initializer_list<Edge> edges) : Tree(Graph(n, edges)) {}

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  std::span<const Vertex> neighbors(Vertex v) const { return graph_.neighbors(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  bool is_leaf(Vertex v) const { return graph_.degree(v) <= 1; }

  /// Leaves (degree <= 1) in increasing order. K1's vertex counts as a leaf.
  std::vector<Vertex> leaves() const;

  friend bool operator==(const Tree&, const Tree&) = default;

 private:
  Graph graph_;
};

/// Parent/children/depth view of a tree hung from `root`.
struct Rooting {
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  Vertex root = 0;
  std::vector<Vertex> parent;           // kNone at the root
  std::vector<std::uint32_t> depth;
  std::vector<Vertex> order;            // BFS order, root first
  std::vector<std::size_t> child_offsets;
  std::vector<Vertex> child_list;

  std::span<const Vertex> children(Vertex v) const {
    return {child_list.data() + child_offsets[v],
            child_list.data() + child_offsets[v + 1]};
  }
};

Rooting root_tree(const Tree& t, Vertex root);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Subgraph induced by `keep` (any order, no duplicates). Vertex i of the
/// result corresponds to `original[i]`; `original` is `keep` sorted.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

/// Tree minus a vertex set; throws std::invalid_argument if the remainder is
/// empty or disconnected.
struct SubTree {
  Tree tree;
  std::vector<Vertex> original;
};
SubTree remove_vertices(const Tree& t, std::span<const Vertex> removed);

/// Applies a vertex relabeling: vertex v of `g` becomes `perm[v]`.
Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph cycle_graph(std::size_t n);

}  // namespace etdom

#endif  // ETDOM_GRAPH_HPP
