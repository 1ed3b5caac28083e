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

#ifndef ETDOM_LEAF_RANK_HPP
#define ETDOM_LEAF_RANK_HPP

#include <vector>

#include "etdom/graph.hpp"

namespace etdom {

inline constexpr int kNoRank = -1;

/// Leaf rank of every vertex.
///
/// A vertex of degree <= 1 has rank 0. For t > 0 a vertex is a t-leaf when it
/// is adjacent to a (t-1)-leaf and all but at most one of its neighbours have
/// rank below t; the reported rank is the least such t. Ranks are assigned by
/// peeling in non-decreasing order, so the whole table costs O(n). Every
/// vertex of a tree receives a rank; kNoRank only appears for graphs with
/// cycles.
std::vector<int> classify_t_leaves(const Graph& g);
inline std::vector<int> classify_t_leaves(const Tree& t) { return classify_t_leaves(t.graph()); }

/// L(v) and L[v] for a ranked vertex.
///
/// L(v) is the union of L[u] over neighbours u of strictly lower rank, with
/// L[w] = {w} for a 0-leaf. Both sets are sorted.
struct LeafClosure {
  Vertex center = 0;
  int rank = 0;
  std::vector<Vertex> open_set;
  std::vector<Vertex> closed_set;
};

LeafClosure leaf_closure(const Tree& t, Vertex v);
LeafClosure leaf_closure(const Tree& t, const std::vector<int>& ranks, Vertex v);

}  // namespace etdom

#endif  // ETDOM_LEAF_RANK_HPP
