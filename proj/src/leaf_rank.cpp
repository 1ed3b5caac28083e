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

#include "etdom/leaf_rank.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace etdom {

std::vector<int> classify_t_leaves(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> rank(n, kNoRank);
  std::vector<std::size_t> ranked_neighbors(n, 0);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) <= 1) {
      rank[v] = 0;
      queue.push_back(v);
    }
  }
  // FIFO order hands out ranks in non-decreasing order, so when the
  // (deg - 1)-th neighbour of w is ranked r, r is the largest rank among
  // those neighbours and w is an (r + 1)-leaf.
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v)) {
      if (rank[w] != kNoRank) continue;
      if (++ranked_neighbors[w] + 1 == g.degree(w)) {
        rank[w] = rank[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return rank;
}

LeafClosure leaf_closure(const Tree& t, Vertex v) {
  return leaf_closure(t, classify_t_leaves(t), v);
}

LeafClosure leaf_closure(const Tree& t, const std::vector<int>& ranks, Vertex v) {
  if (v >= t.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  if (ranks[v] == kNoRank) throw std::invalid_argument("vertex " + std::to_string(v) + " has no leaf rank");
  LeafClosure out;
  out.center = v;
  out.rank = ranks[v];
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : t.neighbors(x)) {
      if (ranks[w] != kNoRank && ranks[w] < ranks[x]) {
        out.open_set.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.open_set.begin(), out.open_set.end());
  out.closed_set = out.open_set;
  out.closed_set.insert(std::lower_bound(out.closed_set.begin(), out.closed_set.end(), v), v);
  return out;
}

}  // namespace etdom
