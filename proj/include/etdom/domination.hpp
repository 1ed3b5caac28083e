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

#ifndef ETDOM_DOMINATION_HPP
#define ETDOM_DOMINATION_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

/// A minimum distance-k dominating set and its size (k = 1 is classic
/// domination). `witness` is sorted.
struct DominationResult {
  std::size_t value = 0;
  std::vector<Vertex> witness;
  int k = 1;
};

/// True iff every vertex of `g` is within distance k of some vertex of `set`.
bool is_distance_dominating(const Graph& g, std::span<const Vertex> set, int k);

/// Exact gamma_k of a tree in O(n k).
///
/// Bottom-up DP over a chain of 2k + 1 nested states per vertex: "a chosen
/// vertex within d of v" for d = 0..k, then "every undominated vertex of the
/// subtree lies within e of v" for e = 0..k-1. Each state implies the next,
/// so every table is non-increasing and children combine in O(k) each.
DominationResult gamma_k_tree(const Tree& t, int k);

/// Minimum dominating set (k = 1) among those containing every vertex of
/// `forced`. Same DP with the "chosen" state made mandatory at forced vertices.
DominationResult gamma_forced(const Tree& t, std::span<const Vertex> forced);

/// Default size ceiling for the exhaustive solver.
inline constexpr std::size_t kBruteForceMaxOrder = 25;

/// Exact gamma_k of any graph by increasing-cardinality subset search in
/// lexicographic order; the first feasible subset is the witness. Throws
/// GuardRailError when order() > max_order.
DominationResult gamma_k_brute(const Graph& g, int k, std::size_t max_order = kBruteForceMaxOrder);

/// gamma_forced({v}) == gamma(T).
bool in_some_min_dominating_set(const Tree& t, Vertex v);

/// gamma(T - v) == gamma(T) - 1 for a leaf v, with gamma of the empty graph
/// taken as 0 (so K1 answers true). Throws std::invalid_argument if v is not
/// a leaf.
bool leaf_drop_decrement(const Tree& t, Vertex v);

}  // namespace etdom

#endif  // ETDOM_DOMINATION_HPP
